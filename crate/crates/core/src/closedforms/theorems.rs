//! Closed forms of the eight families at integer orders.
//!
//! Every closed form has the shape `P · Σ c_i ζ'(s, u_i + v_i x)` with a
//! family-dependent prefactor `P`, a common order `s ∈ {1-2m, 2-2m}` and
//! Hurwitz offsets linear in `x`:
//!
//! ```text
//! T1  (-1)^m (2π)^{2m-1}/(2m-1)!          [ζ'(1-2m, 1-x/2π) - ζ'(1-2m, x/2π)]
//! T2  (-1)^{m-1} (2π)^{2m-2}/(2m-2)!      [ζ'(2-2m, 1-x/2π) + ζ'(2-2m, x/2π)]
//! T3  (-1)^m π^{2m-1}/(2m-1)!             [2^{2m-1}(ζ'(·,1-x/2π) - ζ'(·,x/2π)) - ζ'(·,1-x/π) + ζ'(·,x/π)]
//! T4  (-1)^{m-1} π^{2m-2}/(2m-2)!         [2^{2m-2}(ζ'(·,1-x/2π) + ζ'(·,x/2π)) - ζ'(·,1-x/π) - ζ'(·,x/π)]
//! T5  (-1)^m π^{2m-1}/(2(2m-1)!)          [2^{2m}(ζ'(·,1-x/2π) - ζ'(·,x/2π)) - ζ'(·,1-x/π) + ζ'(·,x/π)]
//! T6  (-1)^{m-1} π^{2m-2}/(2(2m-2)!)      [2^{2m-1}(ζ'(·,1-x/2π) + ζ'(·,x/2π)) - ζ'(·,1-x/π) - ζ'(·,x/π)]
//! T7  (-1)^{m-1} (2π)^{2m-2}/(2(2m-2)!)   [ζ'(·,¼-x/2π) - ζ'(·,¾-x/2π) - ζ'(·,¼+x/2π) + ζ'(·,¾+x/2π)]
//! T8  (-1)^{m-1} (2π)^{2m-1}/(2(2m-1)!)   [ζ'(·,¼-x/2π) - ζ'(·,¾-x/2π) + ζ'(·,¼+x/2π) - ζ'(·,¾+x/2π)]
//! ```
//!
//! Offsets that vanish at `x = 0` are handled through
//! `ζ'(s, a) = ζ'(s, 1 + a) - a^{-s} ln a`: the logarithms cancel between
//! paired terms and leave a finite remainder when `s = 0`.

use crate::closedforms::series::{Family, SeriesSpec, Trig};
use crate::config::EvalConfig;
use crate::error::{domain, Error, Result};
use crate::foundations::harmonic;
use crate::hurwitz::hurwitz_zeta_sderiv;
use crate::scalar::{int, lit, CompensatedSum, Real};

/// One `coefficient · ζ'(s_arg, a_arg)` contribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaTerm<T> {
    pub coefficient: T,
    pub s_arg: i64,
    pub a_arg: T,
    pub zeta_prime: T,
}

/// A closed-form value with its decomposition:
/// `value = prefactor · Σ coefficient · ζ'(s_arg, a_arg) + remainder`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormResult<T> {
    pub value: T,
    pub prefactor: T,
    pub terms: Vec<ZetaTerm<T>>,
    /// Finite part left over from offsets that vanish at `x = 0`.
    pub remainder: T,
}

impl<T: Real> ClosedFormResult<T> {
    /// Re-sums the value from its terms.
    pub fn reconstruct(&self) -> T {
        let mut acc = CompensatedSum::new();
        for t in &self.terms {
            acc.add(t.coefficient * t.zeta_prime);
        }
        self.prefactor * acc.value() + self.remainder
    }

    fn negated(mut self) -> Self {
        self.value = -self.value;
        self.prefactor = -self.prefactor;
        self.remainder = -self.remainder;
        self
    }
}

/// Offset `a = u + v·x` with weight `coef`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Offset<T> {
    pub coef: T,
    pub u: T,
    pub v: T,
}

impl<T: Real> Offset<T> {
    pub fn new(coef: T, u: T, v: T) -> Self {
        Self { coef, u, v }
    }
}

/// `base^e / e!` as a running product, so large `e` does not overflow early.
pub(crate) fn power_over_factorial<T: Real>(base: T, e: u32) -> T {
    (1..=e as i64).fold(T::one(), |acc, i| acc * base / int::<T>(i))
}

pub(crate) fn sign<T: Real>(exponent: i64) -> T {
    if exponent.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// Evaluates `prefactor · Σ coef ζ'(s_arg, u + v x)`, resolving vanishing offsets.
pub(crate) fn assemble<T: Real>(
    prefactor: T,
    s_arg: i64,
    offsets: &[Offset<T>],
    x: T,
) -> Result<ClosedFormResult<T>> {
    let s = int::<T>(s_arg);
    let mut terms = Vec::with_capacity(offsets.len());
    let mut sum = CompensatedSum::new();
    let mut log_weight = T::zero();
    let mut remainder = CompensatedSum::new();
    for off in offsets {
        let mut a = off.u + off.v * x;
        if a == T::zero() {
            // ζ'(s, v x) = ζ'(s, 1 + v x) - (v x)^{-s} ln(v x); the x-dependent
            // logarithms cancel across the vanishing offsets.
            a = T::one();
            if s_arg == 0 {
                log_weight = log_weight + off.coef;
                remainder.add(-off.coef * off.v.abs().ln());
            }
        }
        if !(a > T::zero()) {
            return Err(domain(format!(
                "Hurwitz offset {a} left (0, ∞) at x = {x}; x is outside the convergence interval"
            )));
        }
        let zp = hurwitz_zeta_sderiv(s, a)?;
        sum.add(off.coef * zp);
        terms.push(ZetaTerm {
            coefficient: off.coef,
            s_arg,
            a_arg: a,
            zeta_prime: zp,
        });
    }
    if log_weight.abs() > T::epsilon() * lit(64.0) {
        return Err(domain(format!("closed form diverges logarithmically at x = {x}")));
    }
    let remainder = prefactor * remainder.value();
    Ok(ClosedFormResult {
        value: prefactor * sum.value() + remainder,
        prefactor,
        terms,
        remainder,
    })
}

/// Prefactor, order and offsets of a family's closed form at order `m`.
pub(crate) fn layout<T: Real>(family: Family, m: u32) -> (T, i64, Vec<Offset<T>>) {
    let pi = T::PI();
    let two_pi = pi * lit(2.0);
    let half = lit::<T>(0.5);
    let (one, zero) = (T::one(), T::zero());
    let w = two_pi.recip(); // x/2π
    let w2 = pi.recip(); // x/π
    let mi = m as i64;
    let pow2 = |e: i64| lit::<T>(2.0).powi(e as i32);
    let quarter = lit::<T>(0.25);
    let three_q = lit::<T>(0.75);
    match family {
        Family::T1 => (
            sign::<T>(mi) * power_over_factorial(two_pi, 2 * m - 1),
            1 - 2 * mi,
            vec![Offset::new(one, one, -w), Offset::new(-one, zero, w)],
        ),
        Family::T2 => (
            sign::<T>(mi - 1) * power_over_factorial(two_pi, 2 * m - 2),
            2 - 2 * mi,
            vec![Offset::new(one, one, -w), Offset::new(one, zero, w)],
        ),
        Family::T3 => {
            let c = pow2(2 * mi - 1);
            (
                sign::<T>(mi) * power_over_factorial(pi, 2 * m - 1),
                1 - 2 * mi,
                vec![
                    Offset::new(c, one, -w),
                    Offset::new(-c, zero, w),
                    Offset::new(-one, one, -w2),
                    Offset::new(one, zero, w2),
                ],
            )
        }
        Family::T4 => {
            let c = pow2(2 * mi - 2);
            (
                sign::<T>(mi - 1) * power_over_factorial(pi, 2 * m - 2),
                2 - 2 * mi,
                vec![
                    Offset::new(c, one, -w),
                    Offset::new(c, zero, w),
                    Offset::new(-one, one, -w2),
                    Offset::new(-one, zero, w2),
                ],
            )
        }
        Family::T5 => {
            let c = pow2(2 * mi);
            (
                sign::<T>(mi) * power_over_factorial(pi, 2 * m - 1) * half,
                1 - 2 * mi,
                vec![
                    Offset::new(c, one, -w),
                    Offset::new(-c, zero, w),
                    Offset::new(-one, one, -w2),
                    Offset::new(one, zero, w2),
                ],
            )
        }
        Family::T6 => {
            let c = pow2(2 * mi - 1);
            (
                sign::<T>(mi - 1) * power_over_factorial(pi, 2 * m - 2) * half,
                2 - 2 * mi,
                vec![
                    Offset::new(c, one, -w),
                    Offset::new(c, zero, w),
                    Offset::new(-one, one, -w2),
                    Offset::new(-one, zero, w2),
                ],
            )
        }
        Family::T7 => (
            sign::<T>(mi - 1) * power_over_factorial(two_pi, 2 * m - 2) * half,
            2 - 2 * mi,
            vec![
                Offset::new(one, quarter, -w),
                Offset::new(-one, three_q, -w),
                Offset::new(-one, quarter, w),
                Offset::new(one, three_q, w),
            ],
        ),
        Family::T8 => (
            sign::<T>(mi - 1) * power_over_factorial(two_pi, 2 * m - 1) * half,
            1 - 2 * mi,
            vec![
                Offset::new(one, quarter, -w),
                Offset::new(-one, three_q, -w),
                Offset::new(one, quarter, w),
                Offset::new(-one, three_q, w),
            ],
        ),
    }
}

pub(crate) fn check_order(m: u32, config: &EvalConfig) -> Result<()> {
    if m < 1 {
        return Err(domain("series order m must be at least 1"));
    }
    if m > config.max_m {
        return Err(domain(format!(
            "series order m = {m} exceeds the configured cap {} (cancellation beyond working precision)",
            config.max_m
        )));
    }
    Ok(())
}

/// Closed-form value of the series described by `spec` at `x`.
pub fn closed_form_eval<T: Real>(spec: &SeriesSpec, x: T) -> Result<ClosedFormResult<T>> {
    closed_form_eval_with(spec, x, &EvalConfig::default())
}

/// [`closed_form_eval`] with explicit configuration.
pub fn closed_form_eval_with<T: Real>(
    spec: &SeriesSpec,
    x: T,
    config: &EvalConfig,
) -> Result<ClosedFormResult<T>> {
    check_order(spec.m, config)?;
    spec.check_x(x, config.endpoint_margin)?;
    // Symmetric families: fold x < 0 by parity (sin odd, cos even).
    if spec.is_symmetric() && x < T::zero() {
        let folded = closed_form_eval_with(spec, -x, config)?;
        return Ok(match spec.trig {
            Trig::Sin => folded.negated(),
            Trig::Cos => folded,
        });
    }
    let (prefactor, s_arg, offsets) = layout::<T>(spec.family(), spec.m);
    assemble(prefactor, s_arg, &offsets, x).map_err(|e| match e {
        Error::Domain(msg) => Error::Domain(format!("{}: {msg}", spec.family())),
        other => other,
    })
}

fn check_singular_args<T: Real>(m: u32, x: T) -> Result<()> {
    if m < 1 {
        return Err(domain("m must be at least 1"));
    }
    if !(x > T::zero() && x < T::PI()) {
        return Err(domain(format!("singular limit term needs 0 < x < π, got {x}")));
    }
    Ok(())
}

/// Limit of the two singular power-series terms of the odd-denominator sine
/// series as `α → 2m`:
/// `(-1)^m x^{2m-1} (ln(x/2) - H_{2m-1}) / (2 (2m-1)!)`.
pub fn singular_limit_term<T: Real>(m: u32, x: T) -> Result<T> {
    check_singular_args(m, x)?;
    let e = 2 * m - 1;
    let h: T = harmonic(e as u64);
    Ok(sign::<T>(m as i64) * power_over_factorial(x, e) * ((x * lit(0.5)).ln() - h) * lit(0.5))
}

/// Cosine analogue of [`singular_limit_term`] (`α → 2m-1`):
/// `(-1)^m x^{2m-2} (ln(x/2) - H_{2m-2}) / (2 (2m-2)!)`.
pub fn singular_limit_term_cos<T: Real>(m: u32, x: T) -> Result<T> {
    check_singular_args(m, x)?;
    let e = 2 * m - 2;
    let h: T = harmonic(e as u64);
    Ok(sign::<T>(m as i64) * power_over_factorial(x, e) * ((x * lit(0.5)).ln() - h) * lit(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const CATALAN: f64 = 0.915_965_594_177_219;

    fn eval(f: Family, m: u32, x: f64) -> f64 {
        closed_form_eval(&SeriesSpec::from_family(f, m).unwrap(), x).unwrap().value
    }

    #[test]
    fn clausen_at_quarter_turn() {
        assert!((eval(Family::T1, 1, PI / 2.0) - CATALAN).abs() < 1e-14);
        assert!(eval(Family::T1, 1, PI).abs() < 1e-15);
    }

    #[test]
    fn logarithmic_collapses() {
        assert!((eval(Family::T2, 1, PI / 2.0) + 0.5 * 2f64.ln()).abs() < 1e-14);
        assert!((eval(Family::T4, 1, PI / 3.0) - 0.5 * 3f64.ln()).abs() < 1e-14);
        assert!((eval(Family::T4, 1, 0.0) - 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn odd_denominator_anchors() {
        assert!((eval(Family::T8, 1, 0.0) - CATALAN).abs() < 1e-14);
        assert!((eval(Family::T5, 1, PI / 2.0) - CATALAN).abs() < 1e-14);
        // Σ (-1)^{n-1} sin((2n-1)x)/(2n-1) = ½ ln(sec x + tan x) on (-π/2, π/2)
        let want = 0.5 * (1.0 / 0.5_f64.cos() + 0.5_f64.tan()).ln();
        assert!((eval(Family::T7, 1, 0.5) - want).abs() < 1e-14);
    }

    #[test]
    fn sine_families_vanish_at_origin() {
        for f in [Family::T3, Family::T7] {
            for m in 1..=3 {
                assert_eq!(eval(f, m, 0.0), 0.0, "{f} m={m}");
            }
        }
    }

    #[test]
    fn parity_fold() {
        for f in [Family::T3, Family::T4, Family::T7, Family::T8] {
            let odd = SeriesSpec::from_family(f, 2).unwrap().trig == Trig::Sin;
            let (p, n) = (eval(f, 2, 0.7), eval(f, 2, -0.7));
            assert_eq!(if odd { -n } else { n }, p, "{f}");
        }
    }

    #[test]
    fn domain_errors() {
        let spec = SeriesSpec::from_family(Family::T1, 1).unwrap();
        assert!(matches!(closed_form_eval(&spec, 6.4), Err(Error::Domain(_))));
        assert!(matches!(closed_form_eval(&spec, 0.0), Err(Error::Domain(_))));
        let spec = SeriesSpec::from_family(Family::T1, 9).unwrap();
        assert!(closed_form_eval(&spec, 1.0).is_err());
        let relaxed = EvalConfig::default().with_max_m(9);
        assert!(closed_form_eval_with(&spec, 1.0, &relaxed).is_ok());
    }

    #[test]
    fn reconstruction() {
        for f in Family::ALL {
            for m in 1..=3 {
                let spec = SeriesSpec::from_family(f, m).unwrap();
                for x in spec.interior_grid::<f64>(5) {
                    let r = closed_form_eval(&spec, x).unwrap();
                    assert!((r.reconstruct() - r.value).abs() <= 1e-13 * r.value.abs().max(1e-300));
                }
            }
        }
    }

    #[test]
    fn singular_terms() {
        assert!((singular_limit_term(1, 2.0_f64).unwrap() - 1.0).abs() < 1e-15);
        let want = -(0.5_f64.ln() - 1.0) / 2.0;
        assert!((singular_limit_term(1, 1.0_f64).unwrap() - want).abs() < 1e-15);
        let want = (0.5_f64.ln() - 11.0 / 6.0) / 12.0;
        assert!((singular_limit_term(2, 1.0_f64).unwrap() - want).abs() < 1e-15);
        assert!(singular_limit_term(1, 0.0_f64).is_err());
        assert!(singular_limit_term(1, 3.2_f64).is_err());
        assert!((singular_limit_term_cos(1, 1.0_f64).unwrap() + 0.5 * 0.5_f64.ln()).abs() < 1e-15);
    }
}
