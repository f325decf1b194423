use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clausen_core::closedforms::Family;

/// Environment variable holding the default comparison tolerance.
pub const TOL_ENV: &str = "CLAUSEN_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "clausen",
    version,
    about = "Closed forms of Clausen-type series at singular orders, checked against independent oracles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one closed form and print its ζ' decomposition next to the oracle.
    Eval(EvalArgs),
    /// Compare closed forms with oracles on a grid; fails if any rel_err exceeds --tol.
    Compare(CompareArgs),
    /// Run property suites and report pass/fail per check.
    Verify(VerifyArgs),
    /// Write closed form vs oracle records for a range of orders.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    SpecialValues,
    Identities,
    ChoiSrivastava,
    Table2,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::SpecialValues => "special-values",
            Suite::Identities => "identities",
            Suite::ChoiSrivastava => "choi-srivastava",
            Suite::Table2 => "table2",
            Suite::All => "all",
        }
    }
}

/// A family, evaluated either by its theorem or by its Table II row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Target {
    pub family: Family,
    pub table2: bool,
}

impl Target {
    pub fn id(&self) -> String {
        if self.table2 {
            format!("table2-{}", self.family)
        } else {
            self.family.to_string()
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// `T1`..`T8`, `table2-T1`..`table2-T8`, comma-separated lists of those, or `all`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Targets(pub Vec<Target>);

impl FromStr for Targets {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(Family::ALL.map(|family| Target { family, table2: false }));
                continue;
            }
            let lower = part.to_ascii_lowercase();
            let (name, table2) = match lower.strip_prefix("table2-") {
                Some(rest) => (rest, true),
                None => (lower.as_str(), false),
            };
            let family = name
                .parse::<Family>()
                .map_err(|_| format!("unknown family `{part}` (expected T1..T8, table2-T1..table2-T8 or all)"))?;
            out.push(Target { family, table2 });
        }
        out.sort();
        out.dedup();
        Ok(Targets(out))
    }
}

/// A single order `3` or an inclusive range `1..3` / `1..=3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orders(pub RangeInclusive<u32>);

impl Orders {
    pub fn single(&self) -> Option<u32> {
        (self.0.start() == self.0.end()).then(|| *self.0.start())
    }
}

impl FromStr for Orders {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("invalid order `{t}` (expected a positive integer)"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let m = parse(s)?;
                (m, m)
            }
        };
        if lo == 0 || hi < lo {
            return Err(format!("invalid order range `{s}` (orders start at 1)"));
        }
        Ok(Orders(lo..=hi))
    }
}

/// Parses `1.25`, `pi`, `-pi`, `0.5pi`, `pi/3`, `2pi/3` or `-0.25*pi`.
pub fn parse_x(s: &str) -> Result<f64, String> {
    let t = s.trim().to_ascii_lowercase().replace(['*', ' '], "");
    let bad = || format!("invalid x `{s}` (expected a number or a multiple of pi such as 0.5pi or pi/3)");
    let Some(idx) = t.find("pi").or_else(|| t.find('π')) else {
        return t.parse::<f64>().map_err(|_| bad());
    };
    let marker = if t[idx..].starts_with("pi") { 2 } else { 'π'.len_utf8() };
    let (coef, rest) = (&t[..idx], &t[idx + marker..]);
    let coef = match coef {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let div = match rest {
        "" => 1.0,
        r => r
            .strip_prefix('/')
            .and_then(|d| d.parse::<f64>().ok())
            .filter(|d| *d != 0.0)
            .ok_or_else(bad)?,
    };
    Ok(coef * std::f64::consts::PI / div)
}

/// Comma-separated abscissae, each accepted by [`parse_x`].
#[derive(Debug, Clone, PartialEq)]
pub struct Abscissae(pub Vec<f64>);

impl FromStr for Abscissae {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',').map(parse_x).collect::<Result<_, _>>().map(Abscissae)
    }
}

#[derive(Debug, Clone, Args)]
pub struct ToleranceArg {
    /// Acceptance threshold on rel_err = |closed_form - oracle| / (1 + |oracle|).
    #[arg(long, env = TOL_ENV, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// T1..T8 or table2-T1..table2-T8.
    #[arg(long)]
    pub family: Targets,
    #[arg(long)]
    pub m: Orders,
    /// Abscissa; a literal or a multiple of pi (`0.5pi`, `pi/3`).
    #[arg(long, value_parser = parse_x, allow_hyphen_values = true)]
    pub x: f64,
    #[command(flatten)]
    pub tol: ToleranceArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// T1..T8, table2-T1..table2-T8, a comma-separated list, or `all`.
    #[arg(long)]
    pub family: Targets,
    /// Order or inclusive range (`2`, `1..3`).
    #[arg(long)]
    pub m: Orders,
    /// Number of evenly spaced interior points, 5% of the interval away from each end.
    #[arg(long, default_value_t = 9, conflicts_with = "x")]
    pub grid: usize,
    /// Explicit comma-separated abscissae instead of a grid.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<Abscissae>,
    #[command(flatten)]
    pub tol: ToleranceArg,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
