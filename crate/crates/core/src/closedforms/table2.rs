//! The general closed-form formula driven by the eight parameter rows.
//!
//! ```text
//! T = (-1)^{m+p-1} π^{2m+p-2} 2^{2m+r-2} / (2m+p-2)!
//!     × [ 2^{2k-2} ζ'(σ, q - x/2π) + δ 2^{2k-2} ζ'(σ, 1-q+x/2π)
//!         - j ( ζ'(σ, 1-q - x/(2cπ)) + δ ζ'(σ, q + x/(2cπ)) ) ],      σ = 2 - p - 2m
//! ```
//!
//! The rows are evaluated literally and compared against the per-family
//! evaluators; the comparison is reported, never patched.

use crate::closedforms::series::{Family, SeriesSpec, Trig};
use crate::closedforms::theorems::{
    assemble, check_order, closed_form_eval_with, power_over_factorial, sign, Offset,
};
use crate::config::EvalConfig;
use crate::error::{domain, Result};
use crate::scalar::{int, lit, Real};

/// `per_m · m + constant`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLinear {
    pub per_m: f64,
    pub constant: f64,
}

impl MLinear {
    pub const fn new(per_m: f64, constant: f64) -> Self {
        Self { per_m, constant }
    }

    pub fn at(&self, m: u32) -> f64 {
        self.per_m * m as f64 + self.constant
    }
}

/// One row of the parameter table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralFormulaParams {
    /// Denominator slope: `a n - b`.
    pub a: i64,
    pub b: i64,
    /// `+1` for plain series, `-1` for alternating ones.
    pub s: i8,
    pub f: Trig,
    pub p: u8,
    pub r: MLinear,
    /// Absent for the rows whose `j = 0`.
    pub c: Option<f64>,
    pub delta: i8,
    pub q: f64,
    pub k: MLinear,
    pub j: i8,
}

const fn row(
    a: i64,
    b: i64,
    s: i8,
    f: Trig,
    p: u8,
    r: MLinear,
    c: Option<f64>,
    delta: i8,
    q: f64,
    k: MLinear,
    j: i8,
) -> GeneralFormulaParams {
    GeneralFormulaParams {
        a,
        b,
        s,
        f,
        p,
        r,
        c,
        delta,
        q,
        k,
        j,
    }
}

const ROWS: [(Family, GeneralFormulaParams); 8] = [
    (Family::T1, row(1, 0, 1, Trig::Sin, 1, MLinear::new(0.0, 1.0), None, -1, 1.0, MLinear::new(0.0, 1.0), 0)),
    (Family::T2, row(1, 0, 1, Trig::Cos, 0, MLinear::new(0.0, 0.0), None, 1, 1.0, MLinear::new(0.0, 1.0), 0)),
    (Family::T3, row(1, 0, -1, Trig::Sin, 1, MLinear::new(-2.0, 2.0), Some(-0.5), -1, 1.0, MLinear::new(1.0, 0.5), -1)),
    (Family::T4, row(1, 0, -1, Trig::Cos, 0, MLinear::new(-2.0, 2.0), Some(-0.5), 1, 1.0, MLinear::new(1.0, 0.0), 1)),
    (Family::T5, row(2, 1, 1, Trig::Sin, 1, MLinear::new(-2.0, 1.0), Some(-0.5), -1, 1.0, MLinear::new(1.0, 1.0), -1)),
    (Family::T6, row(2, 1, 1, Trig::Cos, 0, MLinear::new(-2.0, 1.0), Some(-0.5), 1, 1.0, MLinear::new(1.0, 0.5), 1)),
    (Family::T7, row(2, 1, -1, Trig::Sin, 0, MLinear::new(0.0, -1.0), Some(1.0), 1, 0.25, MLinear::new(0.0, 1.0), 1)),
    (Family::T8, row(2, 1, -1, Trig::Cos, 1, MLinear::new(0.0, 0.0), Some(1.0), -1, 0.25, MLinear::new(0.0, 1.0), -1)),
];

/// All rows, keyed by the family each one claims to reproduce.
pub fn table2_rows() -> &'static [(Family, GeneralFormulaParams); 8] {
    &ROWS
}

/// The row associated with `family`.
pub fn table2_row(family: Family) -> GeneralFormulaParams {
    ROWS.iter().find(|(f, _)| *f == family).map(|(_, p)| *p).expect("every family has a row")
}

/// Identifier used in reports, e.g. `table2-T3`.
pub fn table2_row_id(family: Family) -> String {
    format!("table2-{family}")
}

fn series_spec(params: &GeneralFormulaParams, m: u32) -> Result<SeriesSpec> {
    let odd = match (params.a, params.b) {
        (1, 0) => false,
        (2, 1) => true,
        _ => return Err(domain("denominator pair (a, b) must be (1, 0) or (2, 1)")),
    };
    SeriesSpec::new(params.s < 0, params.f, odd, m)
}

/// Evaluates the general formula for a parameter row at order `m` and `x`.
pub fn general_closed_form<T: Real>(params: &GeneralFormulaParams, m: u32, x: T) -> Result<T> {
    general_closed_form_with(params, m, x, &EvalConfig::default())
}

pub fn general_closed_form_with<T: Real>(
    params: &GeneralFormulaParams,
    m: u32,
    x: T,
    config: &EvalConfig,
) -> Result<T> {
    if !ROWS.iter().any(|(_, p)| p == params) {
        return Err(domain("parameter tuple is not one of the eight table rows"));
    }
    let spec = series_spec(params, m)?;
    check_order(m, config)?;
    spec.check_x(x, config.endpoint_margin)?;
    if spec.is_symmetric() && x < T::zero() {
        let v = general_closed_form_with(params, m, -x, config)?;
        return Ok(if params.f == Trig::Sin { -v } else { v });
    }

    let p = params.p as i64;
    let mi = m as i64;
    let two = lit::<T>(2.0);
    let prefactor = sign::<T>(mi + p - 1)
        * power_over_factorial(T::PI(), (2 * mi + p - 2) as u32)
        * two.powf(lit(2.0 * m as f64 + params.r.at(m) - 2.0));
    let s_arg = 2 - p - 2 * mi;
    let w = (T::PI() * two).recip();
    let q = lit::<T>(params.q);
    let delta = int::<T>(params.delta as i64);
    let lead = two.powf(lit(2.0 * params.k.at(m) - 2.0));
    let mut offsets = vec![
        Offset::new(lead, q, -w),
        Offset::new(delta * lead, T::one() - q, w),
    ];
    if params.j != 0 {
        let c = params.c.ok_or_else(|| domain("row with j ≠ 0 needs c"))?;
        let v = (lit::<T>(2.0 * c) * T::PI()).recip();
        let j = int::<T>(params.j as i64);
        offsets.push(Offset::new(-j, T::one() - q, -v));
        offsets.push(Offset::new(-j * delta, q, v));
    }
    Ok(assemble(prefactor, s_arg, &offsets, x)?.value)
}

/// Literal-reading conventions used by [`general_closed_form`].
pub const LITERAL_READING: &str = "literal reading: prefactor (-1)^{m+p-1} π^{2m+p-2} 2^{2m+r-2}/(2m+p-2)!; \
order 2-p-2m; row column k used as the exponent in 2^{2k-2}; r enters only through 2^{2m+r-2}; \
c enters only through the offsets x/(2cπ); rows with j = 0 keep only the first two terms; \
x < 0 folded by the parity of f";

/// One grid point where a row disagrees with its family's evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct RowDeviation {
    pub row_id: String,
    pub family: Family,
    pub m: u32,
    pub x: f64,
    pub theorem: f64,
    pub table: f64,
    pub abs_err: f64,
}

/// Per-row outcome of the consistency sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct RowSummary {
    pub row_id: String,
    pub family: Family,
    pub points: usize,
    pub max_abs_err: f64,
    pub consistent: bool,
}

/// Machine-readable comparison of every row against its family's evaluator.
#[derive(Debug, Clone, PartialEq)]
pub struct Table2Report {
    pub tolerance: f64,
    pub interpretation: &'static str,
    pub rows: Vec<RowSummary>,
    pub deviations: Vec<RowDeviation>,
}

impl Table2Report {
    pub fn all_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.consistent)
    }
}

/// Compares every row with its family's evaluator on `points` interior
/// abscissae for each `m` in `orders`.
pub fn table2_consistency(orders: &[u32], points: usize, tolerance: f64) -> Result<Table2Report> {
    let config = EvalConfig::default();
    let mut rows = Vec::new();
    let mut deviations = Vec::new();
    for &(family, params) in table2_rows() {
        let row_id = table2_row_id(family);
        let mut max_abs_err = 0.0_f64;
        let mut count = 0;
        for &m in orders {
            let spec = SeriesSpec::from_family(family, m)?;
            for x in spec.interior_grid::<f64>(points) {
                let theorem = closed_form_eval_with(&spec, x, &config)?.value;
                let table = general_closed_form_with(&params, m, x, &config)?;
                let abs_err = (theorem - table).abs();
                count += 1;
                max_abs_err = max_abs_err.max(abs_err);
                if !(abs_err <= tolerance * (1.0 + theorem.abs())) {
                    deviations.push(RowDeviation {
                        row_id: row_id.clone(),
                        family,
                        m,
                        x,
                        theorem,
                        table,
                        abs_err,
                    });
                }
            }
        }
        let consistent = !deviations.iter().any(|d| d.family == family);
        rows.push(RowSummary {
            row_id,
            family,
            points: count,
            max_abs_err,
            consistent,
        });
    }
    Ok(Table2Report {
        tolerance,
        interpretation: LITERAL_READING,
        rows,
        deviations,
    })
}
