//! Command implementations for the `clausen` binary.
//!
//! Every command writes to a caller-supplied sink (stdout or `--out`) and
//! returns a [`CliError`] whose [`exit_code`](CliError::exit_code) is the
//! process status: 0 success, 1 I/O, 2 domain/usage, 3 convergence,
//! 4 failed comparison or verification.

pub mod args;
pub mod error;
pub mod record;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;

pub use args::{Cli, Command};
pub use error::CliError;
pub use record::{RunRecord, CSV_HEADER};

use args::{CompareArgs, EvalArgs, Format, GridArgs, SweepArgs, VerifyArgs};
use record::{compute, compute_all, decomposition, human, machine, plan, write_records};

/// Runs `command`, writing its primary output to `--out` or `stdout` and
/// diagnostics to `stderr`.
pub fn run(command: &Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Eval(a) => with_sink(a.out.as_deref(), stdout, |out| cmd_eval(a, out)),
        Command::Compare(a) => cmd_compare(a, stdout, stderr),
        Command::Verify(a) => with_sink(a.out.as_deref(), stdout, |out| cmd_verify(a, out)),
        Command::Sweep(a) => cmd_sweep(a, stdout),
    }
}

/// Buffers the whole output so a failed run leaves no partial file behind.
fn with_sink<F>(path: Option<&Path>, stdout: &mut dyn Write, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    let mut buf = Vec::new();
    let result = f(&mut buf);
    // verification failures still produce their report
    if matches!(result, Ok(()) | Err(CliError::VerifyFailed(_))) {
        match path {
            Some(p) => write_file(p, &buf)?,
            None => {
                stdout.write_all(&buf)?;
                stdout.flush()?;
            }
        }
    }
    result
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let wrap = |source| CliError::Output { path: path.to_path_buf(), source };
    let mut w = BufWriter::new(File::create(path).map_err(wrap)?);
    w.write_all(bytes).map_err(wrap)?;
    w.flush().map_err(wrap)
}

#[derive(Serialize)]
struct TermJson {
    coefficient: f64,
    s_arg: i64,
    a_arg: f64,
    zeta_prime: f64,
}

#[derive(Serialize)]
struct EvalJson {
    record: RunRecord,
    prefactor: Option<f64>,
    remainder: Option<f64>,
    terms: Vec<TermJson>,
}

pub fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let [target] = a.family.0[..] else {
        return Err(CliError::Usage("eval takes exactly one family".into()));
    };
    let m = a
        .m
        .single()
        .ok_or_else(|| CliError::Usage("eval takes a single order, not a range".into()))?;
    let parts = decomposition(target, m, a.x)?;
    let rec = compute(target, m, a.x, a.tol.tol)?;
    match a.format {
        Format::Text => {
            writeln!(out, "{} m={} x={}", rec.family, rec.m, human(rec.x))?;
            writeln!(out, "closed form  {}", human(rec.closed_form))?;
            if let Some(p) = &parts {
                writeln!(out, "prefactor    {}", human(p.prefactor))?;
                for t in &p.terms {
                    let call = format!("zeta'({}, {})", t.s_arg, human(t.a_arg));
                    writeln!(
                        out,
                        "  {:>19} * {call:<28} zeta' = {}",
                        human(t.coefficient),
                        human(t.zeta_prime)
                    )?;
                }
                if p.remainder != 0.0 {
                    writeln!(out, "remainder    {}", human(p.remainder))?;
                }
            }
            writeln!(
                out,
                "oracle       {}  ({}, {} terms)",
                human(rec.oracle),
                rec.oracle_method,
                rec.terms_used
            )?;
            writeln!(out, "abs_err      {:.3e}", rec.abs_err)?;
            writeln!(out, "rel_err      {:.3e}", rec.rel_err)?;
        }
        Format::Csv => write_records(out, std::slice::from_ref(&rec), Format::Csv)?,
        Format::Json => {
            let doc = EvalJson {
                prefactor: parts.as_ref().map(|p| p.prefactor),
                remainder: parts.as_ref().map(|p| p.remainder),
                terms: parts
                    .iter()
                    .flat_map(|p| &p.terms)
                    .map(|t| TermJson {
                        coefficient: t.coefficient,
                        s_arg: t.s_arg,
                        a_arg: t.a_arg,
                        zeta_prime: t.zeta_prime,
                    })
                    .collect(),
                record: rec,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(io::Error::from)?)?;
        }
    }
    Ok(())
}

fn grid_records(g: &GridArgs) -> Result<Vec<RunRecord>, CliError> {
    if !(g.tol.tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {}", g.tol.tol)));
    }
    let points = plan(&g.family.0, g.m.0.clone(), g.x.as_ref().map(|x| &x.0[..]), g.grid)?;
    compute_all(&points, g.tol.tol)
}

pub fn cmd_compare(a: &CompareArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let records = grid_records(&a.grid)?;
    let worst = records
        .iter()
        .max_by(|p, q| p.rel_err.total_cmp(&q.rel_err))
        .expect("a grid has at least one point");
    let tol = a.grid.tol.tol;
    let summary = format!(
        "summary: {} records, max rel_err {} at {} m={} x={} (tol {tol:e})",
        records.len(),
        machine(worst.rel_err),
        worst.family,
        worst.m,
        machine(worst.x)
    );
    let failed = records.iter().filter(|r| !(r.rel_err <= tol)).count();
    with_sink(a.grid.out.as_deref(), stdout, |out| {
        write_records(out, &records, a.format)?;
        if a.format == Format::Text {
            writeln!(out, "{summary}")?;
        }
        Ok(())
    })?;
    if a.format != Format::Text || a.grid.out.is_some() {
        writeln!(stderr, "{summary}")?;
    }
    if failed > 0 {
        return Err(CliError::VerifyFailed(format!(
            "{failed} of {} records exceed rel_err tolerance {tol:e}",
            records.len()
        )));
    }
    Ok(())
}

pub fn cmd_sweep(a: &SweepArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let records = grid_records(&a.grid)?;
    with_sink(a.grid.out.as_deref(), stdout, |out| write_records(out, &records, a.format))
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let report = verify::run_suite(a.suite);
    verify::write_report(out, &report, a.format)?;
    if report.passed {
        Ok(())
    } else {
        let failed: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == verify::Status::Fail)
            .map(|c| format!("{}/{}", c.suite, c.name))
            .collect();
        Err(CliError::VerifyFailed(format!("failed checks: {}", failed.join(", "))))
    }
}
