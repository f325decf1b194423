//! Closed forms of Clausen-type trigonometric series at singular orders.
//!
//! The eight series families `Σ ε^{n-1} f(d_n x)/d_n^α` (plain or alternating
//! signs, sine or cosine, all `n` or odd denominators only) have closed forms
//! at the integer orders where the generic power-series expansion breaks
//! down. Those forms are finite combinations of `∂ζ(s, a)/∂s` at
//! non-positive integers `s`, which [`hurwitz`] evaluates by an analytically
//! differentiated Euler–Maclaurin expansion.
//!
//! Every numeric routine is generic over [`scalar::Real`]; the aliases below
//! fix the scalar to `f64`.
//!
//! ```
//! use clausen_core::closedforms::{closed_form_eval, Family, SeriesSpec};
//!
//! let spec = SeriesSpec::from_family(Family::T1, 1).unwrap();
//! let cl2 = closed_form_eval(&spec, std::f64::consts::FRAC_PI_2).unwrap();
//! assert!((cl2.value - 0.915_965_594_177_219).abs() < 1e-12);
//! ```

pub mod closedforms;
pub mod config;
pub mod dirichlet;
pub mod error;
pub mod foundations;
pub mod hurwitz;
pub mod oracles;
pub mod scalar;

pub use config::EvalConfig;
pub use error::{Error, Result};

pub type ClosedFormResultF64 = closedforms::ClosedFormResult<f64>;
pub type ZetaTermF64 = closedforms::ZetaTerm<f64>;
pub type OracleReportF64 = oracles::OracleReport<f64>;
pub type HurwitzPointF64 = hurwitz::HurwitzPoint<f64>;
pub type MathConstantsF64 = foundations::MathConstants<f64>;
pub type LimitProbeF64 = oracles::LimitProbe<f64>;
