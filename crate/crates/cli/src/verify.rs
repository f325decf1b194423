//! Property suites behind `clausen verify`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_2, PI};
use std::io::Write;
use std::sync::OnceLock;
use std::time::Instant;

use clausen_core::closedforms::{closed_form_eval, table2_consistency, Family, SeriesSpec, Table2Report};
use clausen_core::dirichlet::{
    beta_fn, eta, lambda, riemann_zeta, special_values, zeta_neg_odd, zeta_prime_neg_even, Exactness,
};
use clausen_core::foundations::{gamma_fn, log_gamma, MathConstants};
use clausen_core::hurwitz::{
    hurwitz_formula_partial, hurwitz_formula_tail_bound, hurwitz_zeta, hurwitz_zeta_sderiv,
};
use clausen_core::oracles::{choi_srivastava_check, direct_sum, limit_probe_details};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Format, Suite};
use crate::error::CliError;
use crate::record::{human, machine};

/// Orders and grid size of the closed form vs oracle acceptance grid.
pub const GRID_ORDERS: [u32; 3] = [1, 2, 3];
pub const GRID_POINTS: usize = 9;
pub const GRID_TOL: f64 = 1e-8;
pub const GRID_SECONDS: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A known row-level disagreement, written to the deviation report.
    Reported,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Reported => "REPORTED",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub status: Status,
    /// Worst observed error (or NaN if the check could not be evaluated).
    pub measured: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeviationJson {
    pub row_id: String,
    pub m: u32,
    pub x: f64,
    pub theorem: f64,
    pub table: f64,
    pub abs_err: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowJson {
    pub row_id: String,
    pub points: usize,
    pub max_abs_err: f64,
    pub consistent: bool,
}

/// Machine-readable Table II deviation report.
#[derive(Debug, Clone, Serialize)]
pub struct DeviationReport {
    pub tolerance: f64,
    pub interpretation: String,
    pub rows: Vec<RowJson>,
    pub deviations: Vec<DeviationJson>,
}

impl From<&Table2Report> for DeviationReport {
    fn from(r: &Table2Report) -> Self {
        Self {
            tolerance: r.tolerance,
            interpretation: r.interpretation.to_string(),
            rows: r
                .rows
                .iter()
                .map(|row| RowJson {
                    row_id: row.row_id.clone(),
                    points: row.points,
                    max_abs_err: row.max_abs_err,
                    consistent: row.consistent,
                })
                .collect(),
            deviations: r
                .deviations
                .iter()
                .map(|d| DeviationJson {
                    row_id: d.row_id.clone(),
                    m: d.m,
                    x: d.x,
                    theorem: d.theorem,
                    table: d.table,
                    abs_err: d.abs_err,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table2_report: Option<DeviationReport>,
}

struct Collector {
    name: &'static str,
    checks: Vec<Check>,
}

impl Collector {
    fn new(name: &'static str) -> Self {
        Self { name, checks: Vec::new() }
    }

    fn push(&mut self, name: impl Into<String>, measured: f64, tolerance: f64, detail: impl Into<String>) {
        let status = if measured <= tolerance { Status::Pass } else { Status::Fail };
        self.push_status(name, status, measured, tolerance, detail);
    }

    fn push_status(
        &mut self,
        name: impl Into<String>,
        status: Status,
        measured: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) {
        self.checks.push(Check {
            suite: self.name,
            name: name.into(),
            status,
            measured,
            tolerance,
            detail: detail.into(),
        });
    }

    /// Records `f`'s worst error, or a failure if it errors.
    fn measure(
        &mut self,
        name: &str,
        tolerance: f64,
        f: impl FnOnce() -> clausen_core::Result<(f64, String)>,
    ) {
        match f() {
            Ok((err, detail)) => self.push(name, err, tolerance, detail),
            Err(e) => self.push_status(name, Status::Fail, f64::NAN, tolerance, e.to_string()),
        }
    }
}

fn max_over<I, F>(items: I, mut f: F) -> clausen_core::Result<f64>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> clausen_core::Result<f64>,
{
    let mut worst = 0.0_f64;
    for item in items {
        let e = f(item)?;
        worst = if e.is_nan() { f64::NAN } else { worst.max(e) };
    }
    Ok(worst)
}

fn special_value_checks(s: &mut Collector) {
    let exact: [(&str, fn() -> clausen_core::Result<f64>, f64); 4] = [
        ("eta(1) = ln 2", || eta(1.0), LN_2),
        ("beta(0) = 1/2", || beta_fn(0.0), 0.5),
        ("beta(1) = pi/4", || beta_fn(1.0), FRAC_PI_4),
        ("zeta(0) = -1/2", || riemann_zeta(0.0), -0.5),
    ];
    for (name, f, want) in exact {
        s.measure(name, 1e-12, || {
            let v = f()?;
            Ok(((v - want).abs(), format!("value {}", human(v))))
        });
    }
    for n in 1..=5 {
        s.measure(&format!("zeta(-{}) = 0", 2 * n), 1e-12, || {
            let v = riemann_zeta(-2.0 * n as f64)?;
            Ok((v.abs(), format!("value {v:e}")))
        });
        s.measure(&format!("beta({}) = 0", 1 - 2 * n), 1e-12, || {
            let v = beta_fn(1.0 - 2.0 * n as f64)?;
            Ok((v.abs(), format!("value {v:e}")))
        });
    }
    s.measure("tabulated special values", 1e-12, || {
        let table = special_values();
        let worst = max_over(table, |sv| {
            let v = sv.function_id.eval(sv.argument as f64)?;
            Ok(match sv.exactness {
                Exactness::ExactZero if v != 0.0 => f64::INFINITY,
                _ => (v - sv.value).abs() / (1.0 + sv.value.abs()),
            })
        })?;
        Ok((worst, format!("{} entries", table.len())))
    });
    s.measure("zeta(1-2n) closed form vs continuation, n=1..6", 1e-12, || {
        let worst = max_over(1..=6u32, |n| {
            let a = zeta_neg_odd::<f64>(n)?;
            let b = riemann_zeta(1.0 - 2.0 * n as f64)?;
            Ok((a - b).abs() / b.abs())
        })?;
        Ok((worst, "relative".into()))
    });
}

/// Worst `rel_err` of the theorem evaluators against direct summation on the
/// acceptance grid, and the wall time it took. Computed once per process.
pub fn oracle_grid() -> &'static clausen_core::Result<(f64, String, f64)> {
    static GRID: OnceLock<clausen_core::Result<(f64, String, f64)>> = OnceLock::new();
    GRID.get_or_init(|| {
        let start = Instant::now();
        let mut points = Vec::new();
        for family in Family::ALL {
            for m in GRID_ORDERS {
                let spec = SeriesSpec::from_family(family, m)?;
                points.extend(spec.interior_grid::<f64>(GRID_POINTS).into_iter().map(|x| (spec, x)));
            }
        }
        let errs = points
            .par_iter()
            .map(|(spec, x)| {
                let c = closed_form_eval(spec, *x)?.value;
                let o = direct_sum(spec, *x, 1e-11)?;
                Ok(((c - o.value).abs() / (1.0 + o.value.abs()), spec.family(), spec.m, *x))
            })
            .collect::<clausen_core::Result<Vec<_>>>()?;
        let worst = errs
            .iter()
            .copied()
            .fold((0.0, Family::T1, 0, 0.0), |a, b| if b.0 > a.0 { b } else { a });
        let detail = format!(
            "{} points; worst at {} m={} x={}",
            errs.len(),
            worst.1,
            worst.2,
            human(worst.3)
        );
        Ok((worst.0, detail, start.elapsed().as_secs_f64()))
    })
}

fn grid_checks(s: &mut Collector) {
    match oracle_grid() {
        Ok((worst, detail, secs)) => {
            s.push("closed forms vs direct summation grid", *worst, GRID_TOL, detail.clone());
            s.push("grid wall time (s)", *secs, GRID_SECONDS, "all 216 points");
        }
        Err(e) => s.push_status("closed forms vs direct summation grid", Status::Fail, f64::NAN, GRID_TOL, e.to_string()),
    }
}

fn cf(family: Family, m: u32, x: f64) -> clausen_core::Result<f64> {
    Ok(closed_form_eval(&SeriesSpec::from_family(family, m)?, x)?.value)
}

fn identity_checks(s: &mut Collector) {
    let s_grid = [-3.0_f64, -1.5, 0.5, 2.5];
    let a_grid = [0.1_f64, 0.25, 0.7, 1.0];
    let sa = || s_grid.into_iter().flat_map(move |s| a_grid.map(|a| (s, a)));

    s.measure("hurwitz shift recurrence", 1e-11, || {
        let w = max_over(sa(), |(s, a)| {
            let l = hurwitz_zeta(s, a)?;
            Ok((l - a.powf(-s) - hurwitz_zeta(s, a + 1.0)?).abs() / (1.0 + l.abs()))
        })?;
        Ok((w, "16 (s, a) points".into()))
    });
    s.measure("hurwitz derivative recurrence", 1e-9, || {
        let w = max_over(sa(), |(s, a)| {
            Ok((hurwitz_zeta_sderiv(s, a)? + a.powf(-s) * a.ln() - hurwitz_zeta_sderiv(s, a + 1.0)?).abs())
        })?;
        Ok((w, "16 (s, a) points".into()))
    });
    s.measure("zeta'(-2n) vs closed form, n=1..4", 1e-9, || {
        let w = max_over(1..=4u32, |n| {
            Ok((hurwitz_zeta_sderiv(-2.0 * n as f64, 1.0)? - zeta_prime_neg_even::<f64>(n)?).abs())
        })?;
        Ok((w, "absolute".into()))
    });
    s.measure("zeta'(0,a) = lnGamma(a) - ln(2pi)/2", 1e-10, || {
        let c = MathConstants::<f64>::new();
        let w = max_over([0.25, 0.5, 0.75, 1.0], |a| {
            Ok((hurwitz_zeta_sderiv(0.0, a)? - log_gamma(a)? + 0.5 * c.log_2pi).abs())
        })?;
        Ok((w, "a in {1/4, 1/2, 3/4, 1}".into()))
    });
    s.measure("hurwitz derivative vs 5-point stencil", 1e-7, || {
        let h = 1e-4;
        let pts = [-4.0, -2.0, -1.0, 0.0].into_iter().flat_map(|s| [0.25, 0.5, 0.75, 1.0].map(|a| (s, a)));
        let w = max_over(pts, |(s, a)| {
            let z = |t: f64| hurwitz_zeta(t, a);
            let fd = (z(s - 2.0 * h)? - 8.0 * z(s - h)? + 8.0 * z(s + h)? - z(s + 2.0 * h)?) / (12.0 * h);
            Ok((fd - hurwitz_zeta_sderiv(s, a)?).abs())
        })?;
        Ok((w, "step 1e-4".into()))
    });
    s.measure("beta from two Hurwitz values", 1e-11, || {
        let w = max_over([-2.0, 0.5, 3.0], |x: f64| {
            let d = 4f64.powf(-x) * (hurwitz_zeta(x, 0.25)? - hurwitz_zeta(x, 0.75)?);
            let b = beta_fn(x)?;
            Ok((d - b).abs() / (1.0 + b.abs()))
        })?;
        Ok((w, "s in {-2, 0.5, 3}".into()))
    });
    s.measure("zeta functional equation", 1e-11, || {
        let w = max_over([2.5, 4.0, 7.3], |x: f64| {
            let rhs = 2.0 * riemann_zeta(x)? * gamma_fn(x)? * (PI * x / 2.0).cos() / (2.0 * PI).powf(x);
            Ok((riemann_zeta(1.0 - x)? - rhs).abs())
        })?;
        Ok((w, "s in {2.5, 4, 7.3}".into()))
    });
    s.measure("eta = (1 - 2^(1-s)) zeta", 1e-12, || {
        let w = max_over([-3.5, 0.5, 2.0, 6.0], |x: f64| {
            let want = (1.0 - 2f64.powf(1.0 - x)) * riemann_zeta(x)?;
            Ok((eta(x)? - want).abs() / (1.0 + want.abs()))
        })?;
        Ok((w, "s in {-3.5, 0.5, 2, 6}".into()))
    });
    s.measure("zeta + eta = 2 lambda", 1e-12, || {
        let w = max_over([2.0, 3.7, 8.0], |x: f64| Ok((riemann_zeta(x)? + eta(x)? - 2.0 * lambda(x)?).abs()))?;
        Ok((w, "s in {2, 3.7, 8}".into()))
    });
    s.measure("beta reflection", 1e-10, || {
        let w = max_over([2.0, 3.0, 4.5], |x: f64| {
            let r = (2.0 / PI).powf(x) * (PI * x / 2.0).sin() * gamma_fn(x)? * beta_fn(x)?;
            Ok((beta_fn(1.0 - x)? - r).abs())
        })?;
        Ok((w, "s in {2, 3, 4.5}".into()))
    });
    s.measure("Hurwitz Fourier series within its tail bound", 1.0, || {
        let pts = [2.0, 3.0].into_iter().flat_map(|x| [0.25, 0.5, 1.0].map(|a| (x, a)));
        let w = max_over(pts, |(x, a)| {
            let terms = if x == 2.0 { 1_000_000 } else { 100_000 };
            let gap = (hurwitz_formula_partial::<f64>(x, a, terms)? - hurwitz_zeta(1.0 - x, a)?).abs();
            Ok(gap / hurwitz_formula_tail_bound(x, terms)?)
        })?;
        Ok((w, "ratio |partial - zeta(1-s,a)| / tail bound".into()))
    });
    match limit_probe_details::<f64>() {
        Ok(p) => {
            s.push("s lambda(1+s) -> 1/2", (p.lambda_order2 - 0.5).abs(), 1e-6, format!("probe {}", human(p.lambda_order2)));
            s.push(
                "Richardson orders agree",
                (p.lambda_order2 - p.lambda_order1).abs(),
                1e-7,
                "order 2 vs order 1",
            );
            s.push("eta(1 +- 1e-6) -> ln 2", (p.eta - LN_2).abs(), 1e-8, format!("probe {}", human(p.eta)));
        }
        Err(e) => s.push_status("limit probes", Status::Fail, f64::NAN, 1e-6, e.to_string()),
    }
    s.measure("T2 m=1 = -ln(2 sin(x/2))", 1e-10, || {
        let w = max_over([PI / 3.0, FRAC_PI_2, 2.0, 1.0, 4.0], |x| {
            Ok((cf(Family::T2, 1, x)? + (2.0 * (x / 2.0).sin()).ln()).abs())
        })?;
        Ok((w, "5 points".into()))
    });
    s.measure("T4 m=1 = ln(2 cos(x/2))", 1e-10, || {
        let w = max_over([PI / 3.0, FRAC_PI_2, 2.0, -1.0, 0.5], |x| {
            Ok((cf(Family::T4, 1, x)? - (2.0 * (x / 2.0).cos()).ln()).abs())
        })?;
        Ok((w, "5 points".into()))
    });
    s.measure("T1 m=1 at pi/2 = Catalan (direct-sum reference)", 1e-10, || {
        let spec = SeriesSpec::from_family(Family::T1, 1)?;
        let reference = direct_sum(&spec, FRAC_PI_2, 1e-12)?.value;
        let reference = (reference * 1e12).round() / 1e12;
        let v = cf(Family::T1, 1, FRAC_PI_2)?;
        Ok(((v - reference).abs(), format!("closed form {} vs reference {reference:.12}", human(v))))
    });
    s.measure("d/dx T1 (m=2) = T2 (m=2) at pi/2", 1e-5, || {
        let h = 1e-5;
        let fd = (cf(Family::T1, 2, FRAC_PI_2 + h)? - cf(Family::T1, 2, FRAC_PI_2 - h)?) / (2.0 * h);
        Ok(((fd - cf(Family::T2, 2, FRAC_PI_2)?).abs(), "central difference, step 1e-5".into()))
    });
    s.measure("closed-form decomposition re-sums to value", 1e-13, || {
        let mut worst = 0.0_f64;
        for family in Family::ALL {
            for m in 1..=4 {
                let spec = SeriesSpec::from_family(family, m)?;
                for x in spec.interior_grid::<f64>(5) {
                    let r = closed_form_eval(&spec, x)?;
                    worst = worst.max((r.reconstruct() - r.value).abs() / r.value.abs().max(1e-300));
                }
            }
        }
        Ok((worst, "relative".into()))
    });
    grid_checks(s);
}

fn choi_srivastava_checks(s: &mut Collector) {
    for n in 0..=4u32 {
        s.measure(&format!("Choi-Srivastava n={n}"), 1e-9, || {
            let pts = [1.0, 0.25, 0.75].into_iter().flat_map(|a| [0.05, -0.05, 0.2 * a, -0.2 * a].map(|t| (a, t)));
            let w = max_over(pts, |(a, t)| {
                let (l, r) = choi_srivastava_check::<f64>(n, a, t, 200)?;
                Ok((l - r).abs())
            })?;
            Ok((w, "a in {1, 1/4, 3/4}, t in {+-0.05, +-0.2a}".into()))
        });
    }
}

fn table2_checks(s: &mut Collector) -> Option<DeviationReport> {
    let report = match table2_consistency(&GRID_ORDERS, GRID_POINTS, GRID_TOL) {
        Ok(r) => r,
        Err(e) => {
            s.push_status("Table II consistency", Status::Fail, f64::NAN, GRID_TOL, e.to_string());
            return None;
        }
    };
    for row in &report.rows {
        let status = if row.consistent { Status::Pass } else { Status::Reported };
        let detail = if row.consistent {
            format!("{} points", row.points)
        } else {
            let n = report.deviations.iter().filter(|d| d.row_id == row.row_id).count();
            format!("{n} of {} points deviate; see deviation report", row.points)
        };
        s.push_status(format!("{} matches theorem evaluator", row.row_id), status, row.max_abs_err, GRID_TOL, detail);
    }
    if !report.all_consistent() {
        // a deviating row is acceptable only when the theorems themselves hold
        grid_checks(s);
    }
    Some(DeviationReport::from(&report))
}

/// Runs `suite` and collects its checks.
pub fn run_suite(suite: Suite) -> VerifyReport {
    let mut checks = Vec::new();
    let mut table2_report = None;
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::SpecialValues, Suite::Identities, Suite::ChoiSrivastava, Suite::Table2],
        _ => std::slice::from_ref(&suite),
    };
    for &part in parts {
        let mut s = Collector::new(part.name());
        match part {
            Suite::SpecialValues => special_value_checks(&mut s),
            Suite::Identities => identity_checks(&mut s),
            Suite::ChoiSrivastava => choi_srivastava_checks(&mut s),
            Suite::Table2 => table2_report = table2_checks(&mut s),
            Suite::All => unreachable!(),
        }
        checks.extend(s.checks);
    }
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    VerifyReport {
        suite: suite.name(),
        passed,
        checks,
        table2_report,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_report(out: &mut dyn Write, report: &VerifyReport, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(report).map_err(std::io::Error::from)?;
            writeln!(out, "{text}")?;
        }
        Format::Csv => {
            writeln!(out, "suite,check,status,measured,tolerance,detail")?;
            for c in &report.checks {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    c.suite,
                    csv_field(&c.name),
                    c.status.label().to_ascii_lowercase(),
                    machine(c.measured),
                    machine(c.tolerance),
                    csv_field(&c.detail)
                )?;
            }
            if let Some(t) = &report.table2_report {
                for d in &t.deviations {
                    let detail = format!(
                        "m={} x={} theorem={} table={}",
                        d.m,
                        machine(d.x),
                        machine(d.theorem),
                        machine(d.table)
                    );
                    writeln!(
                        out,
                        "table2,{},deviation,{},{},{}",
                        d.row_id,
                        machine(d.abs_err),
                        machine(t.tolerance),
                        csv_field(&detail)
                    )?;
                }
            }
        }
        Format::Text => {
            for c in &report.checks {
                writeln!(
                    out,
                    "{:<8} {}/{}  measured {:.3e}  tol {:.1e}  {}",
                    c.status.label(),
                    c.suite,
                    c.name,
                    c.measured,
                    c.tolerance,
                    c.detail
                )?;
            }
            if let Some(t) = &report.table2_report {
                writeln!(out, "table2 deviation report ({})", t.interpretation)?;
                for row in &t.rows {
                    writeln!(
                        out,
                        "  {:<10} {:>3} points  max abs_err {:.3e}  {}",
                        row.row_id,
                        row.points,
                        row.max_abs_err,
                        if row.consistent { "consistent" } else { "DEVIATES" }
                    )?;
                }
                for d in &t.deviations {
                    writeln!(
                        out,
                        "  DEVIATION {} m={} x={} theorem={} table={} abs_err={:.3e}",
                        d.row_id,
                        d.m,
                        human(d.x),
                        human(d.theorem),
                        human(d.table),
                        d.abs_err
                    )?;
                }
            }
            let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
            writeln!(
                out,
                "{}: {} checks, {} failed",
                report.suite,
                report.checks.len(),
                failed
            )?;
        }
    }
    Ok(())
}
