//! Hurwitz zeta `ζ(s, a)` and its order derivative `∂ζ/∂s`.
//!
//! The working path is Euler–Maclaurin summation, shifted by `N` direct terms
//! and closed with `M` Bernoulli corrections:
//!
//! ```text
//! ζ(s,a) ≈ Σ_{k<N} (k+a)^{-s} + A^{1-s}/(s-1) + A^{-s}/2
//!          + Σ_{j=1}^{M} B_{2j}/(2j)! (s)_{2j-1} A^{-s-2j+1},     A = N + a
//! ```
//!
//! The derivative differentiates that expansion term by term, so it keeps
//! full working precision where the closed forms subtract nearly equal
//! `ζ'` values.
//!
//! For strongly negative orders the expansion cancels catastrophically in
//! binary64 (the direct terms grow like `A^{|s|}` while the result is of size
//! `|s|!/(2π)^{|s|}`), so below [`REFLECTION_THRESHOLD`] the evaluators use
//! Hurwitz's Fourier series `ζ(1-σ, a) = 2Γ(σ)(2π)^{-σ} Σ cos(πσ/2 - 2πna)/n^σ`,
//! which converges like `n^{-σ}` there.

use crate::error::{domain, Error, Result};
use crate::foundations::bernoulli::{even_over_factorial, BERNOULLI_CAPACITY};
use crate::foundations::{digamma, log_gamma, MathConstants};
use crate::scalar::{cos_pi, int, lit, sin_pi, to_f64, CompensatedSum, Real};

/// Orders below this use the Fourier-series representation instead of
/// Euler–Maclaurin.
pub const REFLECTION_THRESHOLD: f64 = -2.9;

/// Largest number of Bernoulli corrections a plan may use.
pub const MAX_CORRECTIONS: usize = BERNOULLI_CAPACITY / 2 - 2;

const MIN_SHIFT: usize = 1;
const MAX_SHIFT: usize = 4096;
const FOURIER_CAP: i64 = 200_000;
const LIFT_LIMIT: f64 = 64.0;

/// A validated evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzPoint<T> {
    pub s: T,
    pub a: T,
}

impl<T: Real> HurwitzPoint<T> {
    pub fn new(s: T, a: T) -> Result<Self> {
        if !(a > T::zero()) || !a.is_finite() {
            return Err(domain(format!("Hurwitz offset must satisfy a > 0, got a = {a}")));
        }
        if !s.is_finite() {
            return Err(domain(format!("Hurwitz order must be finite, got s = {s}")));
        }
        if s == T::one() {
            return Err(Error::Pole {
                function: "hurwitz_zeta",
                at: 1.0,
            });
        }
        Ok(Self { s, a })
    }
}

/// What a plan must resolve: the value or the order derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanTarget {
    Value,
    Derivative,
    /// A difference `ζ(s,a) - ζ(s,b)`, in which the pole term cancels.
    Difference,
}

/// Shift and correction depth for one Euler–Maclaurin evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerMaclaurinPlan {
    /// Number of directly summed terms `N`.
    pub shift_n: usize,
    /// Number of Bernoulli correction terms `M`.
    pub correction_m: usize,
    /// Magnitude of the first omitted correction term.
    pub est_error: f64,
}

/// Magnitudes of the correction terms at `A = shift + a`, `j = 1..=limit`.
fn correction_magnitudes<T: Real>(s: T, big_a: T, target: PlanTarget, limit: usize) -> Vec<T> {
    let ln_a = big_a.ln();
    let mut poch = s; // (s)_{2j-1}
    let mut dpoch = T::one();
    let mut power = big_a.powf(-s - T::one()); // A^{-s-2j+1} at j = 1
    let inv_a2 = (big_a * big_a).recip();
    let mut out = Vec::with_capacity(limit);
    for j in 1..=limit {
        let c: T = even_over_factorial(j).expect("within table");
        let mag = match target {
            PlanTarget::Value | PlanTarget::Difference => (c * poch * power).abs(),
            PlanTarget::Derivative => (c * power).abs() * (dpoch.abs() + (poch * ln_a).abs()),
        };
        out.push(mag);
        let f1 = s + int((2 * j - 1) as i64);
        let f2 = s + int((2 * j) as i64);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        power = power * inv_a2;
    }
    out
}

impl EulerMaclaurinPlan {
    /// Smallest shift whose correction series falls below working precision
    /// before it starts to diverge, together with the matching depth.
    ///
    /// Keeping the shift minimal matters for negative orders, where every
    /// extra direct term adds rounding of size `A^{|s|}`.
    pub fn select<T: Real>(s: T, a: T, target: PlanTarget) -> Self {
        let eps = T::epsilon() * lit(0.25);
        for shift in MIN_SHIFT..=MAX_SHIFT {
            let big_a = int::<T>(shift as i64) + a;
            let tail = (big_a.powf(T::one() - s) / (s - T::one())).abs();
            let scale = match target {
                PlanTarget::Value => tail + big_a.powf(-s),
                PlanTarget::Difference => big_a.powf(T::one() - s) + big_a.powf(-s),
                PlanTarget::Derivative => tail * (T::one() + big_a.ln().abs()) + tail / (s - T::one()).abs(),
            };
            let mags = correction_magnitudes(s, big_a, target, MAX_CORRECTIONS + 1);
            let mut prev = T::infinity();
            for (idx, &m) in mags.iter().enumerate() {
                if m <= eps * scale {
                    return Self {
                        shift_n: shift,
                        correction_m: idx,
                        est_error: to_f64(m.max(eps * scale)).max(f64::MIN_POSITIVE),
                    };
                }
                if m > prev {
                    break;
                }
                prev = m;
            }
        }
        let big_a = int::<T>(MAX_SHIFT as i64) + a;
        let mags = correction_magnitudes(s, big_a, target, MAX_CORRECTIONS + 1);
        Self {
            shift_n: MAX_SHIFT,
            correction_m: MAX_CORRECTIONS,
            est_error: to_f64(mags[MAX_CORRECTIONS]).max(f64::MIN_POSITIVE),
        }
    }

    /// A fixed plan; `est_error` is the first omitted value-correction term.
    pub fn fixed<T: Real>(s: T, a: T, shift_n: usize, correction_m: usize) -> Result<Self> {
        if correction_m > MAX_CORRECTIONS {
            return Err(Error::Capacity {
                requested: 2 * correction_m,
                capacity: BERNOULLI_CAPACITY,
            });
        }
        let big_a = int::<T>(shift_n as i64) + a;
        let mags = correction_magnitudes(s, big_a, PlanTarget::Value, correction_m + 1);
        let est = to_f64(mags[correction_m]);
        Ok(Self {
            shift_n,
            correction_m,
            est_error: if est > 0.0 && est.is_finite() { est } else { f64::MIN_POSITIVE },
        })
    }
}

/// Euler–Maclaurin pieces that do not depend on the pole term.
struct Expansion<T> {
    direct: T,
    half: T,
    corrections: T,
}

fn em_regular<T: Real>(s: T, a: T, plan: &EulerMaclaurinPlan, deriv: bool) -> Expansion<T> {
    let mut direct = CompensatedSum::new();
    for k in 0..plan.shift_n {
        let x = int::<T>(k as i64) + a;
        let p = x.powf(-s);
        direct.add(if deriv { -x.ln() * p } else { p });
    }
    let big_a = int::<T>(plan.shift_n as i64) + a;
    let ln_a = big_a.ln();
    let a_pow = big_a.powf(-s);
    let half = if deriv { -lit::<T>(0.5) * ln_a * a_pow } else { lit::<T>(0.5) * a_pow };

    let mut corr = CompensatedSum::new();
    let mut poch = s;
    let mut dpoch = T::one();
    let mut power = a_pow / big_a;
    let inv_a2 = (big_a * big_a).recip();
    for j in 1..=plan.correction_m {
        let c: T = even_over_factorial(j).expect("within table");
        let term = if deriv {
            c * (dpoch - poch * ln_a) * power
        } else {
            c * poch * power
        };
        corr.add(term);
        let f1 = s + int((2 * j - 1) as i64);
        let f2 = s + int((2 * j) as i64);
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        power = power * inv_a2;
    }
    Expansion {
        direct: direct.value(),
        half,
        corrections: corr.value(),
    }
}

fn em_value<T: Real>(s: T, a: T, plan: &EulerMaclaurinPlan) -> T {
    let e = em_regular(s, a, plan, false);
    let big_a = int::<T>(plan.shift_n as i64) + a;
    let tail = big_a.powf(T::one() - s) / (s - T::one());
    e.direct + tail + e.half + e.corrections
}

fn em_sderiv<T: Real>(s: T, a: T, plan: &EulerMaclaurinPlan) -> T {
    let e = em_regular(s, a, plan, true);
    let big_a = int::<T>(plan.shift_n as i64) + a;
    let sm1 = s - T::one();
    let p = big_a.powf(T::one() - s);
    let tail = -big_a.ln() * p / sm1 - p / (sm1 * sm1);
    e.direct + tail + e.half + e.corrections
}

/// Splits `a` into `base + j` with `base` in `(0, top]`; returns `(base, j)`.
fn reduce_offset<T: Real>(a: T, top: T) -> (T, usize) {
    if a <= top {
        return (a, 0);
    }
    let j = (a - top).ceil();
    let jn = j.to_usize().expect("bounded offset");
    (a - j, jn)
}

/// `Σ_{i<count} (base+i)^{-s}` or its order derivative.
fn recurrence_sum<T: Real>(s: T, base: T, count: usize, deriv: bool) -> T {
    let mut acc = CompensatedSum::new();
    for i in 0..count {
        let x = base + int(i as i64);
        let p = x.powf(-s);
        acc.add(if deriv { -x.ln() * p } else { p });
    }
    acc.value()
}

fn fourier_branch<T: Real>(s: T, a: T, deriv: bool) -> Result<T> {
    // Hurwitz's series needs 0 < a <= 1; lift larger offsets down first.
    let (base, count) = reduce_offset(a, T::one());
    let sigma = T::one() - s;
    let c = MathConstants::<T>::new();
    let log_pref = lit::<T>(2.0).ln() + log_gamma(sigma)? - sigma * c.log_2pi;
    let pref = log_pref.exp();
    let eps = T::epsilon() * lit(0.125);
    let mut sum_c = CompensatedSum::new();
    let mut sum_d = CompensatedSum::new();
    let half_sigma = sigma * lit(0.5);
    let osc = sin_pi(base).abs().recip();
    let mut n: i64 = 1;
    loop {
        let nf = int::<T>(n);
        let p = nf * base;
        let e = nf.mul_add(base, -p);
        let frac = (p - p.floor()) + e;
        let arg = half_sigma - lit::<T>(2.0) * frac;
        let w = nf.powf(-sigma);
        let cs = cos_pi(arg);
        sum_c.add(cs * w);
        if deriv {
            sum_d.add((-T::FRAC_PI_2() * sin_pi(arg) - nf.ln() * cs) * w);
        }
        // Partial sums of the phases stay bounded by 1/|sin πa| unless a is
        // (close to) an integer, where the plain tail bound applies.
        let tail = w * (nf / (sigma - T::one())).min(osc);
        if tail < eps || n >= FOURIER_CAP {
            break;
        }
        n += 1;
    }
    let value = if deriv {
        let dpref = pref * (digamma(sigma)? - c.log_2pi);
        -(dpref * sum_c.value() + pref * sum_d.value())
    } else {
        pref * sum_c.value()
    };
    // ζ(s, base+count) = ζ(s, base) - Σ_{i<count} (base+i)^{-s}
    Ok(value - recurrence_sum(s, base, count, deriv))
}

fn lifted_em<T: Real>(s: T, a: T, deriv: bool) -> T {
    let (base, count) = if a <= lit(LIFT_LIMIT) {
        reduce_offset(a, lit(2.0))
    } else {
        (a, 0)
    };
    let target = if deriv { PlanTarget::Derivative } else { PlanTarget::Value };
    let plan = EulerMaclaurinPlan::select(s, base, target);
    let v = if deriv { em_sderiv(s, base, &plan) } else { em_value(s, base, &plan) };
    v - recurrence_sum(s, base, count, deriv)
}

/// Hurwitz zeta `ζ(s, a)` for real `s ≠ 1`, `a > 0`.
pub fn hurwitz_zeta<T: Real>(s: T, a: T) -> Result<T> {
    let p = HurwitzPoint::new(s, a)?;
    if p.s < lit(REFLECTION_THRESHOLD) {
        return fourier_branch(p.s, p.a, false);
    }
    Ok(lifted_em(p.s, p.a, false))
}

/// `ζ(s, a)` evaluated with an explicit plan (no offset lifting).
pub fn hurwitz_zeta_with_plan<T: Real>(s: T, a: T, plan: &EulerMaclaurinPlan) -> Result<T> {
    let p = HurwitzPoint::new(s, a)?;
    Ok(em_value(p.s, p.a, plan))
}

/// Order derivative `∂ζ(s, a)/∂s`.
pub fn hurwitz_zeta_sderiv<T: Real>(s: T, a: T) -> Result<T> {
    let p = HurwitzPoint::new(s, a)?;
    if p.s < lit(REFLECTION_THRESHOLD) {
        return fourier_branch(p.s, p.a, true);
    }
    Ok(lifted_em(p.s, p.a, true))
}

/// `ζ(s, a) - ζ(s, b)` with the poles at `s = 1` cancelled analytically,
/// so the difference is finite (and smooth) through `s = 1`.
pub fn hurwitz_zeta_diff<T: Real>(s: T, a: T, b: T) -> Result<T> {
    for off in [a, b] {
        if !(off > T::zero()) || !off.is_finite() {
            return Err(domain(format!("Hurwitz offset must satisfy a > 0, got {off}")));
        }
    }
    if !s.is_finite() {
        return Err(domain("Hurwitz order must be finite"));
    }
    if s < lit(REFLECTION_THRESHOLD) {
        return Ok(fourier_branch(s, a, false)? - fourier_branch(s, b, false)?);
    }
    let (base_a, count_a) = reduce_offset(a, lit(2.0));
    let (base_b, count_b) = reduce_offset(b, lit(2.0));
    let pa = EulerMaclaurinPlan::select(s, base_a, PlanTarget::Difference);
    let pb = EulerMaclaurinPlan::select(s, base_b, PlanTarget::Difference);
    let plan = EulerMaclaurinPlan {
        shift_n: pa.shift_n.max(pb.shift_n),
        correction_m: pa.correction_m.max(pb.correction_m),
        est_error: pa.est_error.max(pb.est_error),
    };
    let ea = em_regular(s, base_a, &plan, false);
    let eb = em_regular(s, base_b, &plan, false);
    let n = int::<T>(plan.shift_n as i64);
    let (big_a, big_b) = (n + base_a, n + base_b);
    // (A^u - B^u)/(s-1) with u = 1-s, written so that u -> 0 is exact
    let u = T::one() - s;
    let ln_ratio = (big_a / big_b).ln();
    let pole = if u == T::zero() {
        -ln_ratio
    } else {
        -big_b.powf(u) * (u * ln_ratio).exp_m1() / u
    };
    let regular = (ea.direct - eb.direct) + (ea.half - eb.half) + (ea.corrections - eb.corrections);
    let lift_a = if count_a > 0 { recurrence_sum(s, base_a, count_a, false) } else { T::zero() };
    let lift_b = if count_b > 0 { recurrence_sum(s, base_b, count_b, false) } else { T::zero() };
    Ok(regular + pole - lift_a + lift_b)
}

/// Truncated right-hand side of Hurwitz's formula,
/// `2Γ(s)/(2π)^s Σ_{n=1}^{terms} cos(πs/2 - 2nπa)/n^s`, an estimate of `ζ(1-s, a)`.
pub fn hurwitz_formula_partial<T: Real>(s: T, a: T, terms: usize) -> Result<T> {
    if !(s > T::one()) {
        return Err(domain(format!("Hurwitz formula check needs s > 1, got {s}")));
    }
    if !(a > T::zero() && a <= T::one()) {
        return Err(domain(format!("Hurwitz formula check needs 0 < a <= 1, got {a}")));
    }
    if terms == 0 {
        return Err(domain("Hurwitz formula check needs at least one term"));
    }
    let mut acc = CompensatedSum::new();
    for n in 1..=terms {
        let nf = int::<T>(n as i64);
        let angle = T::PI() * (s * lit(0.5) - lit::<T>(2.0) * nf * a);
        acc.add(angle.cos() / nf.powf(s));
    }
    let two_pi = T::PI() * lit(2.0);
    let pref = lit::<T>(2.0) * (log_gamma(s)? - s * two_pi.ln()).exp();
    Ok(pref * acc.value())
}

/// Bound on the truncation error of [`hurwitz_formula_partial`].
pub fn hurwitz_formula_tail_bound<T: Real>(s: T, terms: usize) -> Result<T> {
    if !(s > T::one()) {
        return Err(domain("tail bound needs s > 1"));
    }
    let two_pi = T::PI() * lit(2.0);
    let pref = lit::<T>(2.0) * (log_gamma(s)? - s * two_pi.ln()).exp();
    let n = int::<T>(terms as i64);
    Ok(pref * n.powf(T::one() - s) / (s - T::one()))
}
