//! Riemann ζ and the Dirichlet series η, λ, β on the real line.
//!
//! ```text
//! η(s) = Σ (-1)^{n-1} n^{-s}      λ(s) = Σ (2n-1)^{-s}      β(s) = Σ (-1)^{n-1} (2n-1)^{-s}
//! ```
//!
//! Continuation goes through Hurwitz zeta for `s ≥ 0` and through the
//! functional equation `ζ(1-σ) = 2Γ(σ)cos(πσ/2)ζ(σ)/(2π)^σ` for `s < 0`.

use std::sync::LazyLock;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{domain, Error, Result};
use crate::foundations::{bernoulli, log_gamma, MathConstants};
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_diff};
use crate::scalar::{as_integer, cos_pi, int, lit, sin_pi, Real};

/// Half-width of the band around `s = 1` rejected by [`riemann_zeta`] and [`lambda`].
pub const POLE_GUARD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    Zeta,
    Eta,
    Lambda,
    Beta,
}

impl FunctionId {
    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Zeta => "zeta",
            FunctionId::Eta => "eta",
            FunctionId::Lambda => "lambda",
            FunctionId::Beta => "beta",
        }
    }

    /// Evaluates the function at `s`.
    pub fn eval<T: Real>(self, s: T) -> Result<T> {
        match self {
            FunctionId::Zeta => riemann_zeta(s),
            FunctionId::Eta => eta(s),
            FunctionId::Lambda => lambda(s),
            FunctionId::Beta => beta_fn(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactZero,
    ExactRational,
    TranscendentalFormula,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValue {
    pub function_id: FunctionId,
    pub argument: i64,
    pub value: f64,
    pub exactness: Exactness,
}

static SPECIAL_VALUES: LazyLock<Vec<SpecialValue>> = LazyLock::new(|| {
    use std::f64::consts::{FRAC_PI_4, LN_2};
    let mut out = Vec::new();
    let mut push = |function_id, argument, value, exactness| {
        out.push(SpecialValue {
            function_id,
            argument,
            value,
            exactness,
        })
    };
    for n in 1..=8_i64 {
        push(FunctionId::Zeta, -2 * n, 0.0, Exactness::ExactZero);
        push(FunctionId::Eta, -2 * n, 0.0, Exactness::ExactZero);
        push(FunctionId::Lambda, -2 * n, 0.0, Exactness::ExactZero);
        push(FunctionId::Beta, 1 - 2 * n, 0.0, Exactness::ExactZero);
    }
    push(FunctionId::Zeta, 0, -0.5, Exactness::ExactRational);
    push(FunctionId::Beta, 0, 0.5, Exactness::ExactRational);
    push(FunctionId::Eta, 0, 0.5, Exactness::ExactRational);
    push(FunctionId::Eta, 1, LN_2, Exactness::TranscendentalFormula);
    push(FunctionId::Beta, 1, FRAC_PI_4, Exactness::TranscendentalFormula);
    for n in 1..=8_usize {
        // ζ(1-2n) = -B_{2n}/(2n)
        let b: BigRational = bernoulli(2 * n).expect("within table");
        let v = -(b / BigRational::from_integer((2 * n).into()));
        push(
            FunctionId::Zeta,
            1 - 2 * n as i64,
            v.to_f64().expect("finite"),
            Exactness::ExactRational,
        );
    }
    out
});

/// Table of exactly known values used by the closed forms and the checks.
pub fn special_values() -> &'static [SpecialValue] {
    &SPECIAL_VALUES
}

fn is_exact_zero(id: FunctionId, s: f64) -> bool {
    let Some(n) = (s.fract() == 0.0).then_some(s as i64) else {
        return false;
    };
    match id {
        FunctionId::Zeta | FunctionId::Eta | FunctionId::Lambda => n < 0 && n % 2 == 0,
        FunctionId::Beta => n < 0 && n % 2 != 0,
    }
}

fn exact_zero<T: Real>(id: FunctionId, s: T) -> bool {
    as_integer(s).is_some_and(|n| is_exact_zero(id, n as f64))
}

fn check_pole<T: Real>(function: &'static str, s: T) -> Result<()> {
    if (s - T::one()).abs() < lit(POLE_GUARD) {
        return Err(Error::Pole { function, at: 1.0 });
    }
    Ok(())
}

fn finite<T: Real>(s: T) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("argument must be finite, got {s}")))
    }
}

/// `ζ(1-σ)` from `ζ(σ)` for `σ > 1`, assembled in log space.
fn zeta_reflected<T: Real>(sigma: T) -> Result<T> {
    let c = MathConstants::<T>::new();
    let cos = cos_pi(sigma * lit(0.5));
    if cos == T::zero() {
        return Ok(T::zero());
    }
    let z = hurwitz_zeta(sigma, T::one())?;
    let mag = (log_gamma(sigma)? - sigma * c.log_2pi).exp();
    Ok(lit::<T>(2.0) * mag * z * cos)
}

/// ζ without the guard band (still rejects `s = 1` itself).
pub(crate) fn zeta_unguarded<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    if exact_zero(FunctionId::Zeta, s) {
        return Ok(T::zero());
    }
    if s < T::zero() {
        return zeta_reflected(T::one() - s);
    }
    hurwitz_zeta(s, T::one())
}

/// Riemann zeta `ζ(s)` for real `s`, rejecting `|s-1| < 1e-3`.
pub fn riemann_zeta<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    check_pole("riemann_zeta", s)?;
    zeta_unguarded(s)
}

/// `ζ(1-2n)` for `n ≥ 1`.
pub fn zeta_neg_odd<T: Real>(n: u32) -> Result<T> {
    if n == 0 {
        return Err(domain("zeta_neg_odd needs n >= 1"));
    }
    let two_pi = T::PI() * lit(2.0);
    // (2n-1)!/(2π)^{2n} as a running product of ratios to stay in range
    let mut ratio = two_pi.recip();
    for i in 1..2 * n as i64 {
        ratio = ratio * int::<T>(i) / two_pi;
    }
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    Ok(sign * lit::<T>(2.0) * ratio * hurwitz_zeta(int::<T>(2 * n as i64), T::one())?)
}

/// `ζ'(-2n)` for `n ≥ 1`.
pub fn zeta_prime_neg_even<T: Real>(n: u32) -> Result<T> {
    if n == 0 {
        return Err(domain("zeta_prime_neg_even needs n >= 1"));
    }
    let two_pi = T::PI() * lit(2.0);
    let mut ratio = T::one();
    for i in 1..=2 * n as i64 {
        ratio = ratio * int::<T>(i) / two_pi;
    }
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    Ok(sign * ratio * hurwitz_zeta(int::<T>(2 * n as i64 + 1), T::one())? * lit(0.5))
}

/// Dirichlet eta, entire; `η(1) = ln 2` exactly.
pub fn eta<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    if s == T::one() {
        return Ok(T::LN_2());
    }
    if exact_zero(FunctionId::Eta, s) {
        return Ok(T::zero());
    }
    if s < T::zero() {
        let factor = -((T::one() - s) * T::LN_2()).exp_m1();
        return Ok(factor * zeta_unguarded(s)?);
    }
    // η(s) = 2^{-s}(ζ(s,1/2) - ζ(s,1)); the difference has no pole at s = 1
    let half = lit::<T>(0.5);
    Ok(half.powf(s) * hurwitz_zeta_diff(s, half, T::one())?)
}

pub(crate) fn lambda_unguarded<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    if exact_zero(FunctionId::Lambda, s) {
        return Ok(T::zero());
    }
    if s < T::zero() {
        let factor = -(-s * T::LN_2()).exp_m1();
        return Ok(factor * zeta_unguarded(s)?);
    }
    // λ(s) = 2^{-s} ζ(s, 1/2)
    let half = lit::<T>(0.5);
    Ok(half.powf(s) * hurwitz_zeta(s, half)?)
}

/// Dirichlet lambda `λ(s) = (1 - 2^{-s})ζ(s)`, rejecting `|s-1| < 1e-3`.
pub fn lambda<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    check_pole("lambda", s)?;
    lambda_unguarded(s)
}

/// Dirichlet beta, entire: `β(s) = 4^{-s}(ζ(s,1/4) - ζ(s,3/4))`.
pub fn beta_fn<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    if exact_zero(FunctionId::Beta, s) {
        return Ok(T::zero());
    }
    let quarter = lit::<T>(0.25);
    Ok(quarter.powf(s) * hurwitz_zeta_diff(s, quarter, lit(0.75))?)
}

/// β evaluated through its functional equation,
/// `β(s) = (2/π)^{1-s} sin(π(1-s)/2) Γ(1-s) β(1-s)`, for `s < 1`.
///
/// Used as an independent cross-check of [`beta_fn`] in the left half-line.
pub fn beta_via_functional_equation<T: Real>(s: T) -> Result<T> {
    finite(s)?;
    if !(s < T::one()) {
        return Err(domain(format!("functional-equation route needs s < 1, got {s}")));
    }
    let sigma = T::one() - s;
    let sin = sin_pi(sigma * lit(0.5));
    if sin == T::zero() {
        return Ok(T::zero());
    }
    let log_mag = sigma * (T::FRAC_2_PI()).ln() + log_gamma(sigma)?;
    Ok(log_mag.exp() * sin * beta_fn(sigma)?)
}

/// `β'(2k-2m+1) = -(π/2)^{2k-2m+1} (-1)^{k-m} Γ(2m-2k) β(2m-2k)` for `1 ≤ k ≤ m-1`.
pub fn beta_prime_neg_odd<T: Real>(m: u32, k: u32) -> Result<T> {
    if m < 2 || k < 1 || k >= m {
        return Err(domain(format!(
            "beta_prime_neg_odd needs m >= 2 and 1 <= k <= m-1, got m = {m}, k = {k}"
        )));
    }
    let n = (m - k) as i64;
    // (2/π)^{2n-1} (2n-1)! as a product of ratios
    let mut mag = T::one();
    for i in 1..2 * n {
        mag = mag * int::<T>(i) * T::FRAC_2_PI();
    }
    let sign = if n % 2 == 0 { -T::one() } else { T::one() };
    Ok(sign * mag * beta_fn(int::<T>(2 * n))?)
}

/// `(ln|F(s)|, sign F(s))`, stable for strongly negative `s` where `F(s)` itself
/// overflows. Exact zeros give `(-∞, 0)`.
pub fn ln_abs_sign<T: Real>(id: FunctionId, s: T) -> Result<(T, T)> {
    finite(s)?;
    if exact_zero(id, s) {
        return Ok((T::neg_infinity(), T::zero()));
    }
    if s >= lit(-1.0) {
        let v = match id {
            FunctionId::Zeta => zeta_unguarded(s)?,
            FunctionId::Lambda => lambda_unguarded(s)?,
            FunctionId::Eta => eta(s)?,
            FunctionId::Beta => beta_fn(s)?,
        };
        return Ok((v.abs().ln(), v.signum()));
    }
    let sigma = T::one() - s;
    let c = MathConstants::<T>::new();
    let lg = log_gamma(sigma)?;
    match id {
        FunctionId::Beta => {
            let sin = sin_pi(sigma * lit(0.5));
            let b = beta_fn(sigma)?;
            let ln = sigma * T::FRAC_2_PI().ln() + lg + sin.abs().ln() + b.abs().ln();
            Ok((ln, sin.signum() * b.signum()))
        }
        _ => {
            let cos = cos_pi(sigma * lit(0.5));
            let z = hurwitz_zeta(sigma, T::one())?;
            let mut ln = T::LN_2() + lg - sigma * c.log_2pi + cos.abs().ln() + z.abs().ln();
            let mut sign = cos.signum() * z.signum();
            match id {
                // 1 - 2^{1-s} < 0 for s < 1
                FunctionId::Eta => {
                    ln = ln + sigma * T::LN_2() + (-(-sigma * T::LN_2()).exp()).ln_1p();
                    sign = -sign;
                }
                // 1 - 2^{-s} < 0 for s < 0
                FunctionId::Lambda => {
                    ln = ln - s * T::LN_2() + (-(s * T::LN_2()).exp()).ln_1p();
                    sign = -sign;
                }
                _ => {}
            }
            Ok((ln, sign))
        }
    }
}
