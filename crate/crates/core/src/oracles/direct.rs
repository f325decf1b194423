use num_complex::Complex;

use super::{OracleMethod, OracleReport};
use crate::closedforms::{SeriesSpec, Trig};
use crate::config::EvalConfig;
use crate::error::{domain, Error, Result};
use crate::scalar::{int, sin_cos_multiple, to_f64, CompensatedSum, Real};

/// Largest plain partial sum attempted before switching to tail acceleration.
const DIRECT_LIMIT: u64 = 200_000;
/// Depth of the asymptotic tail expansion.
const TAIL_TERMS: usize = 40;
/// Target ratio between consecutive tail-expansion terms.
const TAIL_RATIO: f64 = 0.3;

/// The series `Σ_{n≥1} ε^{n-1} f(d_n x) / d_n^α` with `d_n = D n + E`.
struct Shape<T> {
    alpha: T,
    slope: i64,
    offset: i64,
    alternating: bool,
    trig: Trig,
    x: T,
}

impl<T: Real> Shape<T> {
    fn new(spec: &SeriesSpec, x: T) -> Self {
        let (slope, offset) = if spec.odd_denominators { (2, -1) } else { (1, 0) };
        Self {
            alpha: int(spec.alpha() as i64),
            slope,
            offset,
            alternating: spec.alternating,
            trig: spec.trig,
            x,
        }
    }

    fn denom(&self, n: u64) -> i64 {
        self.slope * n as i64 + self.offset
    }

    fn sign(&self, n: u64) -> T {
        if self.alternating && n.is_multiple_of(2) {
            -T::one()
        } else {
            T::one()
        }
    }

    fn project(&self, z: Complex<T>) -> T {
        match self.trig {
            Trig::Sin => z.im,
            Trig::Cos => z.re,
        }
    }

    /// `ε^{n-1} e^{i d_n x}` — the n-th term without its magnitude.
    fn phase(&self, n: u64) -> Complex<T> {
        let (s, c) = sin_cos_multiple(int::<T>(self.denom(n)), self.x);
        Complex::new(c, s) * self.sign(n)
    }

    fn magnitude(&self, n: u64) -> T {
        int::<T>(self.denom(n)).powf(-self.alpha)
    }

    fn term(&self, n: u64) -> T {
        self.project(self.phase(n)) * self.magnitude(n)
    }

    /// Ratio `ρ` of consecutive phases.
    fn rho(&self) -> Complex<T> {
        let (s, c) = sin_cos_multiple(int::<T>(self.slope), self.x);
        let z = Complex::new(c, s);
        if self.alternating {
            -z
        } else {
            z
        }
    }

    /// Smallest `N` whose integral tail bound is below `tol/2`, if the series
    /// converges absolutely.
    fn direct_terms(&self, tol: f64) -> Option<u64> {
        let alpha = to_f64(self.alpha);
        if alpha < 2.0 {
            return None;
        }
        let k = 2.0 / (tol * (alpha - 1.0));
        let n = if self.slope == 1 {
            k.powf(1.0 / (alpha - 1.0))
        } else {
            // Σ_{n>N} (2n-1)^{-α} ≤ (2N-1)^{1-α} / (2(α-1))
            ((k / 2.0).powf(1.0 / (alpha - 1.0)) + 1.0) / 2.0
        };
        (n.is_finite() && n < 1e15).then(|| n.ceil() as u64 + 1)
    }

    fn tail_bound(&self, n: u64) -> f64 {
        let alpha = to_f64(self.alpha);
        let d = self.denom(n) as f64;
        d.powf(1.0 - alpha) / (self.slope as f64 * (alpha - 1.0))
    }
}

/// Sums the defining series of `spec` at `x` to absolute accuracy `tol`.
pub fn direct_sum<T: Real>(spec: &SeriesSpec, x: T, tol: f64) -> Result<OracleReport<T>> {
    direct_sum_with(spec, x, tol, &EvalConfig::default())
}

pub fn direct_sum_with<T: Real>(
    spec: &SeriesSpec,
    x: T,
    tol: f64,
    config: &EvalConfig,
) -> Result<OracleReport<T>> {
    if !(tol >= 1e-12) || !tol.is_finite() {
        return Err(domain(format!("oracle tolerance must be at least 1e-12, got {tol:e}")));
    }
    spec.check_x(x, config.endpoint_margin)?;
    let shape = Shape::new(spec, x);
    let cap = config.direct_term_cap;
    if spec.alpha() == 1 {
        return cesaro(&shape, tol, cap);
    }
    match shape.direct_terms(tol) {
        Some(n) if n <= DIRECT_LIMIT.min(cap) => Ok(plain(&shape, n)),
        _ => accelerated(&shape, tol, cap),
    }
}

fn rounding_floor<T: Real>(scale: T, terms: u64) -> f64 {
    let eps = to_f64(T::epsilon());
    eps * (1.0 + to_f64(scale).abs()) * (4.0 + (terms as f64).sqrt())
}

fn plain<T: Real>(shape: &Shape<T>, n: u64) -> OracleReport<T> {
    let mut acc = CompensatedSum::new();
    for k in 1..=n {
        acc.add(shape.term(k));
    }
    let value = acc.value();
    OracleReport {
        value,
        method: OracleMethod::Direct,
        terms_used: n,
        error_estimate: shape.tail_bound(n) + rounding_floor(value, n),
    }
}

/// Partial sum to `M - 1` plus the Euler–Boole expansion of the tail,
/// `Σ_{k≥0} ρ^k g(M+k) = Σ_j b_j(ρ) g^{(j)}(M)` with `g(t) = d(t)^{-α}` and
/// `Σ_j b_j t^j = 1/(1 - ρ e^t)`.
fn accelerated<T: Real>(shape: &Shape<T>, tol: f64, cap: u64) -> Result<OracleReport<T>> {
    let rho = shape.rho();
    let r = to_f64(rho.arg()).abs();
    let alpha = to_f64(shape.alpha);
    let slope = shape.slope as f64;
    let target = (alpha + TAIL_TERMS as f64) * slope / (TAIL_RATIO * r);
    let m_f = ((target - shape.offset as f64) / slope).ceil().max(8.0);
    if !m_f.is_finite() || m_f > cap as f64 {
        return Err(Error::Convergence {
            reason: format!("tail expansion needs about {m_f:e} direct terms"),
            best: f64::NAN,
            error_estimate: f64::INFINITY,
            terms: 0,
        });
    }
    let m = m_f as u64;

    let mut partial = CompensatedSum::new();
    for k in 1..m {
        partial.add(shape.term(k));
    }

    let one = Complex::new(T::one(), T::zero());
    let inv = (one - rho).inv();
    let lead = rho * inv;
    let mut b: Vec<Complex<T>> = Vec::with_capacity(TAIL_TERMS + 1);
    b.push(inv);
    let d = int::<T>(shape.denom(m));
    let dslope = int::<T>(shape.slope);
    let mut g = d.powf(-shape.alpha);
    let mut tail = Complex::new(T::zero(), T::zero());
    // b_j vanishes for every other j when ρ = -1, so convergence is judged on
    // the envelope of two consecutive terms
    let mut prev_mag = T::zero();
    let mut last = T::infinity();
    let mut used = 0;
    for j in 0..=TAIL_TERMS {
        if j > 0 {
            let mut acc = Complex::new(T::zero(), T::zero());
            let mut fact = T::one();
            for i in 1..=j {
                fact = fact * int::<T>(i as i64);
                acc = acc + b[j - i] / fact;
            }
            b.push(lead * acc);
            g = -g * (shape.alpha + int::<T>(j as i64 - 1)) * dslope / d;
        }
        let t = b[j] * g;
        let mag = t.norm();
        let envelope = mag.max(prev_mag);
        if j > 0 && envelope > last {
            break;
        }
        tail = tail + t;
        prev_mag = mag;
        last = envelope;
        used = j + 1;
        if j > 0 && envelope <= T::epsilon() * tail.norm() {
            break;
        }
    }
    let tail_value = shape.project(shape.phase(m) * tail);
    let value = partial.value() + tail_value;
    let terms = m + used as u64;
    let error_estimate = to_f64(last) + rounding_floor(value, terms);
    if error_estimate > tol {
        return Err(Error::Convergence {
            reason: "accelerated tail did not reach the tolerance".into(),
            best: to_f64(value),
            error_estimate,
            terms,
        });
    }
    Ok(OracleReport {
        value,
        method: OracleMethod::EulerAccelerated,
        terms_used: terms,
        error_estimate,
    })
}

/// Windowed Cesàro (de la Vallée Poussin) mean: the average of the partial
/// sums `S_n` over `N ≤ n < 2N`. For `Σ ρ^n g(n)` with `g` decreasing the bias
/// is about `2 g(N) / (N |1-ρ|²)`; `N` is chosen so that twice that is below `tol`.
fn cesaro<T: Real>(shape: &Shape<T>, tol: f64, cap: u64) -> Result<OracleReport<T>> {
    let gap = to_f64((Complex::new(T::one(), T::zero()) - shape.rho()).norm());
    let slope = shape.slope as f64;
    // N · d(N) ≥ 8 / (tol |1-ρ|²): half the budget for the bias
    let need = 8.0 / (tol * gap * gap);
    let mut n = (need / slope).sqrt().ceil().max(64.0);
    let mut converged = true;
    if !n.is_finite() || 2.0 * n > cap as f64 {
        n = (cap / 2) as f64;
        converged = false;
    }
    let n = n as u64;
    let estimate = |n: u64| 4.0 / (n as f64 * shape.denom(n) as f64 * gap * gap);

    let mut partial = CompensatedSum::new();
    let mut window = CompensatedSum::new();
    for k in 1..2 * n {
        partial.add(shape.term(k));
        if k >= n {
            window.add(partial.value());
        }
    }
    let value = window.value() / int::<T>(n as i64);
    let terms = 2 * n - 1;
    let error_estimate = estimate(n) + rounding_floor(value, terms);
    if !converged || error_estimate > tol {
        let reason = if converged {
            "Cesàro mean did not reach the tolerance"
        } else {
            "Cesàro window exceeds the term cap"
        };
        return Err(Error::Convergence {
            reason: reason.into(),
            best: to_f64(value),
            error_estimate,
            terms,
        });
    }
    Ok(OracleReport {
        value,
        method: OracleMethod::Cesaro,
        terms_used: terms,
        error_estimate,
    })
}
