use crate::dirichlet::{eta, lambda_unguarded};
use crate::error::{domain, Result};
use crate::foundations::{binomial, digamma, factorial, harmonic, pochhammer};
use crate::hurwitz::{hurwitz_zeta, hurwitz_zeta_sderiv};
use crate::scalar::{int, lit, CompensatedSum, Real};

/// Both sides of the Choi–Srivastava identity
///
/// ```text
/// Σ_{k≥2} ζ(k,a) t^{n+k}/(k)_{n+1}
///   = (-1)^n/n! [ζ'(-n,a-t) - ζ'(-n,a)
///                + Σ_{k=1}^{n} (-t)^k C(n,k) (ζ(k-n,a)(H_n - H_{n-k}) - ζ'(k-n,a))]
///     + (H_n + ψ(a)) t^{n+1}/(n+1)!
/// ```
///
/// with the left side truncated after `terms`. Returns `(lhs, rhs)`.
pub fn choi_srivastava_check<T: Real>(n: u32, a: T, t: T, terms: usize) -> Result<(T, T)> {
    if n > 8 {
        return Err(domain(format!("Choi–Srivastava check supports n <= 8, got {n}")));
    }
    if !(a > T::zero()) {
        return Err(domain(format!("Choi–Srivastava check needs a > 0, got {a}")));
    }
    if !(t.abs() < a) {
        return Err(domain(format!("Choi–Srivastava check needs |t| < a, got t = {t}, a = {a}")));
    }
    if terms < 2 {
        return Err(domain("Choi–Srivastava check needs terms >= 2"));
    }

    let n1 = n as usize + 1;
    let mut lhs = CompensatedSum::new();
    for k in 2..=terms {
        let kt = int::<T>(k as i64);
        let tp = t.powi((n as usize + k) as i32);
        if tp == T::zero() {
            break;
        }
        lhs.add(hurwitz_zeta(kt, a)? * tp / pochhammer(kt, n1));
    }

    let ni = n as i64;
    let h_n: T = harmonic(n as u64);
    let mut bracket = CompensatedSum::new();
    bracket.add(hurwitz_zeta_sderiv(int(-ni), a - t)?);
    bracket.add(-hurwitz_zeta_sderiv(int(-ni), a)?);
    for k in 1..=ni {
        let s = int::<T>(k - ni);
        let h_diff = h_n - harmonic::<T>((ni - k) as u64);
        let inner = hurwitz_zeta(s, a)? * h_diff - hurwitz_zeta_sderiv(s, a)?;
        bracket.add((-t).powi(k as i32) * binomial::<T>(n as u64, k as u64) * inner);
    }
    let sign = if n.is_multiple_of(2) { T::one() } else { -T::one() };
    let rhs = sign / factorial::<T>(n as u64) * bracket.value()
        + (h_n + digamma(a)?) * t.powi(n as i32 + 1) / factorial::<T>(n as u64 + 1);
    Ok((lhs.value(), rhs))
}

/// Outcome of the numeric limit probes near `s = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitProbe<T> {
    /// `h λ(1+h)` extrapolated from `h = 10⁻⁵, 10⁻⁶` (first order).
    pub lambda_order1: T,
    /// `h λ(1+h)` extrapolated from `h = 10⁻⁴, 10⁻⁵, 10⁻⁶` (second order).
    pub lambda_order2: T,
    /// `(η(1-10⁻⁶) + η(1+10⁻⁶))/2`.
    pub eta: T,
}

fn lambda_sample<T: Real>(h: f64) -> Result<T> {
    let s = T::one() + lit(h);
    // the representable step, so that h·λ(1+h) has no rounding bias
    let h_eff = s - T::one();
    Ok(h_eff * lambda_unguarded(s)?)
}

/// Richardson-extrapolated `lim_{h→0} h λ(1+h)` (expected `½`) and the
/// symmetric η probe at 1 (expected `ln 2`).
pub fn limit_probe_details<T: Real>() -> Result<LimitProbe<T>> {
    let f4 = lambda_sample::<T>(1e-4)?;
    let f5 = lambda_sample::<T>(1e-5)?;
    let f6 = lambda_sample::<T>(1e-6)?;
    let ten = lit::<T>(10.0);
    // f(h) = L + c₁h + c₂h² + …, step ratio 10
    let r1_56 = (ten * f6 - f5) / lit(9.0);
    let r1_45 = (ten * f5 - f4) / lit(9.0);
    let lambda_order2 = (lit::<T>(100.0) * r1_56 - r1_45) / lit(99.0);
    let h = lit::<T>(1e-6);
    let eta_avg = (eta(T::one() - h)? + eta(T::one() + h)?) * lit(0.5);
    Ok(LimitProbe {
        lambda_order1: r1_56,
        lambda_order2,
        eta: eta_avg,
    })
}

/// `(λ probe, η probe)`; see [`limit_probe_details`].
pub fn limit_probe_eta_and_lambda<T: Real>() -> Result<(T, T)> {
    let p = limit_probe_details::<T>()?;
    Ok((p.lambda_order2, p.eta))
}
