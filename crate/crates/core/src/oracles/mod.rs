//! Independent evaluation paths for the series families.
//!
//! None of these routines touch the closed forms: [`direct_sum`] sums the
//! defining series, [`power_series_eval`] and [`lambda_series_path`] expand
//! around `x = 0`, and the identity checks exercise the Hurwitz machinery
//! through relations it was not built from.

mod direct;
mod identities;
mod power;

use std::fmt;

pub use direct::{direct_sum, direct_sum_with};
pub use identities::{choi_srivastava_check, limit_probe_details, limit_probe_eta_and_lambda, LimitProbe};
pub use power::{lambda_series_path, power_series_eval, PowerSeriesFamily};

/// How an oracle value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleMethod {
    /// Plain partial sum with an integral tail bound.
    Direct,
    /// Partial sum plus an asymptotic (Euler–Boole) expansion of the oscillating tail.
    EulerAccelerated,
    /// Windowed Cesàro mean of partial sums.
    Cesaro,
    /// Truncated power series in `x`.
    PowerSeries,
    /// Semi-expanded λ form with the analytic singular limit.
    LambdaLimitForm,
}

impl OracleMethod {
    pub fn name(self) -> &'static str {
        match self {
            OracleMethod::Direct => "direct",
            OracleMethod::EulerAccelerated => "euler_accelerated",
            OracleMethod::Cesaro => "cesaro",
            OracleMethod::PowerSeries => "power_series",
            OracleMethod::LambdaLimitForm => "lambda_limit_form",
        }
    }
}

impl fmt::Display for OracleMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of an oracle evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport<T> {
    pub value: T,
    pub method: OracleMethod,
    pub terms_used: u64,
    /// Bound (or first-omitted-term estimate) on `|value - exact|`; always positive.
    pub error_estimate: f64,
}
