use std::io::Write;

use clausen_core::closedforms::{
    closed_form_eval, general_closed_form, table2_row, ClosedFormResult, SeriesSpec,
};
use clausen_core::oracles::direct_sum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;

use crate::args::{Format, Target};
use crate::error::CliError;

/// CSV header of every record stream.
pub const CSV_HEADER: &str = "family,m,x,closed_form,oracle,abs_err,rel_err,oracle_method,terms_used";

/// One closed form vs oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub family: String,
    pub m: u32,
    #[serde(serialize_with = "sci")]
    pub x: f64,
    #[serde(serialize_with = "sci")]
    pub closed_form: f64,
    #[serde(serialize_with = "sci")]
    pub oracle: f64,
    #[serde(serialize_with = "sci")]
    pub abs_err: f64,
    #[serde(serialize_with = "sci")]
    pub rel_err: f64,
    pub oracle_method: String,
    pub terms_used: u64,
}

/// 17 significant digits, the same text as the CSV cell.
fn sci<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    let raw = RawValue::from_string(machine(*v)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

/// Round-trip representation used by the CSV and JSON outputs.
pub fn machine(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".to_string()
    }
}

/// Twelve significant digits, positional where that stays short.
pub fn human(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.11e}")
    }
}

/// Oracle accuracy requested for a comparison at tolerance `tol`.
pub fn oracle_tolerance(tol: f64) -> f64 {
    (tol * 1e-2).clamp(1e-12, 1e-10)
}

/// Closed-form value of `target` (theorem evaluator or Table II row).
pub fn closed_form_value(target: Target, m: u32, x: f64) -> Result<f64, CliError> {
    let spec = SeriesSpec::from_family(target.family, m)?;
    Ok(if target.table2 {
        spec.check_x(x, clausen_core::EvalConfig::default().endpoint_margin)?;
        general_closed_form(&table2_row(target.family), m, x)?
    } else {
        closed_form_eval(&spec, x)?.value
    })
}

/// Closed form and direct-summation oracle at one point.
pub fn compute(target: Target, m: u32, x: f64, tol: f64) -> Result<RunRecord, CliError> {
    let spec = SeriesSpec::from_family(target.family, m)?;
    let closed_form = closed_form_value(target, m, x)?;
    let oracle = direct_sum(&spec, x, oracle_tolerance(tol))?;
    let abs_err = (closed_form - oracle.value).abs();
    Ok(RunRecord {
        family: target.id(),
        m,
        x,
        closed_form,
        oracle: oracle.value,
        abs_err,
        rel_err: abs_err / (1.0 + oracle.value.abs()),
        oracle_method: oracle.method.name().to_string(),
        terms_used: oracle.terms_used,
    })
}

/// The breakdown printed by `eval`.
pub fn decomposition(target: Target, m: u32, x: f64) -> Result<Option<ClosedFormResult<f64>>, CliError> {
    if target.table2 {
        return Ok(None);
    }
    let spec = SeriesSpec::from_family(target.family, m)?;
    Ok(Some(closed_form_eval(&spec, x)?))
}

/// Points of a sweep in output order: by target, then order, then abscissa.
pub fn plan(targets: &[Target], orders: impl Iterator<Item = u32> + Clone, xs: Option<&[f64]>, grid: usize)
    -> Result<Vec<(Target, u32, f64)>, CliError> {
    if xs.is_none() && grid == 0 {
        return Err(CliError::Usage("--grid must be at least 1".into()));
    }
    let mut points = Vec::new();
    for &t in targets {
        for m in orders.clone() {
            let spec = SeriesSpec::from_family(t.family, m)?;
            let row: Vec<f64> = match xs {
                Some(xs) => xs.to_vec(),
                None => spec.interior_grid(grid),
            };
            points.extend(row.into_iter().map(|x| (t, m, x)));
        }
    }
    Ok(points)
}

/// Evaluates every point in parallel; the result keeps the input order and
/// reports the first failure in that order.
pub fn compute_all(points: &[(Target, u32, f64)], tol: f64) -> Result<Vec<RunRecord>, CliError> {
    points
        .par_iter()
        .map(|&(t, m, x)| compute(t, m, x, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

pub fn write_records(out: &mut dyn Write, records: &[RunRecord], format: Format) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{}",
                    r.family,
                    r.m,
                    machine(r.x),
                    machine(r.closed_form),
                    machine(r.oracle),
                    machine(r.abs_err),
                    machine(r.rel_err),
                    r.oracle_method,
                    r.terms_used
                )?;
            }
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(records).map_err(std::io::Error::from)?;
            writeln!(out, "{text}")?;
        }
        Format::Text => {
            writeln!(
                out,
                "{:<10} {:>3} {:>19} {:>19} {:>19} {:>11} {:<17} {:>9}",
                "family", "m", "x", "closed_form", "oracle", "rel_err", "oracle_method", "terms"
            )?;
            for r in records {
                writeln!(
                    out,
                    "{:<10} {:>3} {:>19} {:>19} {:>19} {:>11.3e} {:<17} {:>9}",
                    r.family,
                    r.m,
                    human(r.x),
                    human(r.closed_form),
                    human(r.oracle),
                    r.rel_err,
                    r.oracle_method,
                    r.terms_used
                )?;
            }
        }
    }
    Ok(())
}
