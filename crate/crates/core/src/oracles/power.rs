use super::{OracleMethod, OracleReport};
use crate::closedforms::{singular_limit_term, singular_limit_term_cos, Family, SeriesSpec, Trig};
use crate::dirichlet::{ln_abs_sign, FunctionId};
use crate::error::{domain, Error, Result};
use crate::foundations::{gamma_fn, log_gamma};
use crate::scalar::{as_integer, cos_pi, int, lit, sin_pi, to_f64, CompensatedSum, Real};

/// Fraction of the convergence radius the expansions are trusted on; keeps
/// the asymptotic term ratio `(x/R)²` at or below `0.9 · 0.81`.
const RADIUS_FRACTION: f64 = 0.853_815_6; // 0.9 · √0.9
const MAX_RATIO: f64 = 0.9;

/// One of the eight series shapes, at real (not necessarily integer) order:
/// `Σ F-weighted f(d_n x)/d_n^α` with `F ∈ {ζ, η, λ, β}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PowerSeriesFamily {
    pub function: FunctionId,
    pub trig: Trig,
}

impl PowerSeriesFamily {
    pub fn new(function: FunctionId, trig: Trig) -> Self {
        Self { function, trig }
    }

    /// The shape shared with an integer-order family.
    pub fn of(family: Family) -> Self {
        let (alternating, trig, odd) = family.shape();
        let function = match (alternating, odd) {
            (false, false) => FunctionId::Zeta,
            (true, false) => FunctionId::Eta,
            (false, true) => FunctionId::Lambda,
            (true, true) => FunctionId::Beta,
        };
        Self { function, trig }
    }

    /// Radius of convergence of the expansion in `x`.
    pub fn radius<T: Real>(&self) -> T {
        match self.function {
            FunctionId::Zeta => T::PI() * lit(2.0),
            FunctionId::Eta | FunctionId::Lambda => T::PI(),
            FunctionId::Beta => T::PI() * lit(0.5),
        }
    }

    /// Weight of the non-analytic `x^{α-1}` term.
    fn singular_weight<T: Real>(&self) -> T {
        match self.function {
            FunctionId::Zeta => T::one(),
            FunctionId::Lambda => lit(0.5),
            FunctionId::Eta | FunctionId::Beta => T::zero(),
        }
    }

    fn delta(&self) -> u32 {
        match self.trig {
            Trig::Sin => 1,
            Trig::Cos => 0,
        }
    }

    /// Integer orders where the generic expansion breaks down (a pole of
    /// `ζ`/`λ` meets a zero of the prefactor's trigonometric factor).
    pub fn is_singular<T: Real>(&self, alpha: T) -> bool {
        if self.singular_weight::<T>() == T::zero() {
            return false;
        }
        match as_integer(alpha) {
            // sine: even α (sin(πα/2) = 0); cosine: odd α (cos(πα/2) = 0)
            Some(n) => (n - self.delta() as i64).rem_euclid(2) == 1,
            None => false,
        }
    }
}

fn check_radius<T: Real>(family: &PowerSeriesFamily, x: T) -> Result<()> {
    let limit = family.radius::<T>() * lit(RADIUS_FRACTION);
    if !(x.abs() <= limit) {
        return Err(domain(format!(
            "power-series oracle restricted to |x| <= {limit}, got x = {x}"
        )));
    }
    Ok(())
}

/// Sums `Σ_{k ∈ ks} (-1)^k F(α - 2k - δ) x^{2k+δ}/(2k+δ)!` in log space.
/// Returns `(sum, last |term|, previous |term|, count)`.
fn analytic_part<T: Real>(
    function: FunctionId,
    alpha: T,
    delta: u32,
    ax: T,
    ks: impl Iterator<Item = u32>,
) -> Result<(T, T, T, u64)> {
    let mut acc = CompensatedSum::new();
    let (mut last, mut prev) = (T::zero(), T::zero());
    let mut count = 0;
    let ln_x = ax.ln();
    for k in ks {
        let e = 2 * k + delta;
        let (ln_f, sign_f) = ln_abs_sign(function, alpha - int(e as i64))?;
        let term = if e == 0 {
            sign_f * ln_f.exp()
        } else if ax == T::zero() || sign_f == T::zero() {
            T::zero()
        } else {
            let ln_t = ln_f + int::<T>(e as i64) * ln_x - log_gamma(int::<T>(e as i64 + 1))?;
            sign_f * ln_t.exp()
        };
        let term = if k % 2 == 0 { term } else { -term };
        acc.add(term);
        prev = last;
        last = term.abs();
        count += 1;
    }
    Ok((acc.value(), last, prev, count))
}

fn tail_estimate<T: Real>(family: &PowerSeriesFamily, ax: T, last: T, value: T) -> f64 {
    let q = to_f64((ax / family.radius::<T>()).powi(2));
    let eps = to_f64(T::epsilon());
    let tail = to_f64(last) * q / (1.0 - q);
    (tail + eps * (1.0 + to_f64(value).abs()) * 8.0).max(f64::MIN_POSITIVE)
}

/// Truncated power series of a non-singular order `α` about `x = 0`:
///
/// ```text
/// c π x^{α-1} / (2 Γ(α) f(πα/2)) + Σ_{k<terms} (-1)^k F(α-2k-δ) x^{2k+δ}/(2k+δ)!
/// ```
///
/// with `c = 1, 0, ½, 0` for `F = ζ, η, λ, β` and `δ = 1` for sine, `0` for
/// cosine. Parity in `x` is imposed exactly (`δ = 1` odd, `δ = 0` even).
pub fn power_series_eval<T: Real>(
    family: PowerSeriesFamily,
    alpha: T,
    x: T,
    terms: usize,
) -> Result<OracleReport<T>> {
    if family.is_singular(alpha) {
        return Err(domain(format!(
            "α = {alpha} is singular for the {} {} expansion; use closed_form_eval",
            family.function.name(),
            family.trig.name()
        )));
    }
    if terms == 0 {
        return Err(domain("power series needs at least one term"));
    }
    check_radius(&family, x)?;
    let ax = x.abs();
    let delta = family.delta();

    let weight = family.singular_weight::<T>();
    let singular = if weight == T::zero() || ax == T::zero() {
        T::zero()
    } else {
        let trig = match family.trig {
            Trig::Sin => sin_pi(alpha * lit(0.5)),
            Trig::Cos => cos_pi(alpha * lit(0.5)),
        };
        weight * T::PI() * ax.powf(alpha - T::one()) / (lit::<T>(2.0) * gamma_fn(alpha)? * trig)
    };

    let (series, last, prev, count) =
        analytic_part(family.function, alpha, delta, ax, 0..terms as u32)?;
    if count >= 2 && prev > T::zero() && last / prev >= lit(MAX_RATIO) {
        return Err(Error::Convergence {
            reason: "power series term ratio too close to 1 at truncation".into(),
            best: to_f64(singular + series),
            error_estimate: to_f64(last),
            terms: count,
        });
    }
    let mut value = singular + series;
    if delta == 1 && x < T::zero() {
        value = -value;
    }
    Ok(OracleReport {
        value,
        method: OracleMethod::PowerSeries,
        terms_used: count,
        error_estimate: tail_estimate(&family, ax, last, value),
    })
}

/// Semi-expanded λ form for the odd-denominator, non-alternating families
/// (T5 sine, T6 cosine) at integer order:
///
/// ```text
/// L(x) + Σ_{k=0}^{m-2} (-1)^k λ(2m-2k-1) x^{2k+δ}/(2k+δ)! + Σ_{k≥m} (same)
/// ```
///
/// where `L` is the analytic limit of the two singular terms (the `k = m-1`
/// term, which contains the pole of λ at 1, is absorbed into it).
pub fn lambda_series_path<T: Real>(spec: &SeriesSpec, x: T, terms: usize) -> Result<OracleReport<T>> {
    let family = spec.family();
    if !matches!(family, Family::T5 | Family::T6) {
        return Err(domain(format!("λ-series path applies to T5/T6 only, got {family}")));
    }
    if !(x > T::zero() && x < T::PI()) {
        return Err(domain(format!("λ-series path needs 0 < x < π, got {x}")));
    }
    let m = spec.m;
    let delta = if spec.trig == Trig::Sin { 1 } else { 0 };
    let limit = match spec.trig {
        Trig::Sin => singular_limit_term(m, x)?,
        Trig::Cos => singular_limit_term_cos(m, x)?,
    };
    let alpha = int::<T>(2 * m as i64 - 1 + delta as i64);
    let psf = PowerSeriesFamily::new(FunctionId::Lambda, spec.trig);
    let (head, _, _, head_count) =
        analytic_part(FunctionId::Lambda, alpha, delta, x, 0..m.saturating_sub(1))?;
    let end = m + terms as u32;
    let (tail, last, prev, tail_count) = analytic_part(FunctionId::Lambda, alpha, delta, x, m..end)?;
    if tail_count >= 2 && prev > T::zero() && last / prev >= lit(MAX_RATIO) {
        return Err(Error::Convergence {
            reason: "λ-series term ratio too close to 1 at truncation".into(),
            best: to_f64(limit + head + tail),
            error_estimate: to_f64(last),
            terms: head_count + tail_count,
        });
    }
    let value = limit + head + tail;
    Ok(OracleReport {
        value,
        method: OracleMethod::LambdaLimitForm,
        terms_used: head_count + tail_count + 1,
        error_estimate: tail_estimate(&psf, x, last, value),
    })
}
