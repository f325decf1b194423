//! Γ, log Γ, digamma and polygamma on the real line.
//!
//! log Γ uses Stirling's series at `z >= 12` with the recurrence
//! `Γ(s+1) = s Γ(s)` lifting smaller arguments; negative arguments go through
//! the reflection formula.

use crate::error::{domain, Error, Result};
use crate::foundations::bernoulli::bernoulli_float;
use crate::foundations::numbers::{factorial, MathConstants};
use crate::hurwitz::hurwitz_zeta;
use crate::scalar::{as_integer, cos_pi, int, lit, sin_pi, Real};

const STIRLING_FLOOR: f64 = 12.0;
const STIRLING_TERMS: usize = 10;
const DIGAMMA_FLOOR: f64 = 8.0;
const DIGAMMA_TERMS: usize = 10;

fn stirling<T: Real>(z: T) -> T {
    let c = MathConstants::<T>::new();
    let half = lit::<T>(0.5);
    let mut acc = (z - half) * z.ln() - z + half * c.log_2pi;
    let z2 = z * z;
    let mut zpow = z;
    for j in 1..=STIRLING_TERMS {
        let b: T = bernoulli_float(2 * j).expect("within table");
        let denom = int::<T>((2 * j * (2 * j - 1)) as i64);
        acc = acc + b / (denom * zpow);
        zpow = zpow * z2;
    }
    acc
}

fn non_positive_integer<T: Real>(s: T) -> bool {
    matches!(as_integer(s), Some(n) if n <= 0)
}

/// `ln Γ(s)` for `s > 0`.
pub fn log_gamma<T: Real>(s: T) -> Result<T> {
    if s.is_nan() || s <= T::zero() {
        return Err(domain(format!("log_gamma requires s > 0, got {s}")));
    }
    let floor = lit::<T>(STIRLING_FLOOR);
    if s >= floor {
        return Ok(stirling(s));
    }
    let mut z = s;
    let mut prod = T::one();
    while z < floor {
        prod = prod * z;
        z = z + T::one();
    }
    Ok(stirling(z) - prod.ln())
}

/// `Γ(s)` for real `s` off the non-positive integers.
pub fn gamma_fn<T: Real>(s: T) -> Result<T> {
    if s.is_nan() {
        return Err(domain("gamma of NaN"));
    }
    if non_positive_integer(s) {
        return Err(Error::Pole {
            function: "gamma",
            at: crate::scalar::to_f64(s),
        });
    }
    if let Some(n) = as_integer(s) {
        if n <= 171 {
            return Ok(factorial(n as u64 - 1));
        }
    }
    if s > T::zero() {
        return Ok(log_gamma(s)?.exp());
    }
    // Γ(s) Γ(1-s) = π / sin(πs)
    let g = gamma_fn(T::one() - s)?;
    Ok(T::PI() / (sin_pi(s) * g))
}

/// Digamma `ψ(s) = Γ'(s)/Γ(s)`.
pub fn digamma<T: Real>(s: T) -> Result<T> {
    if s.is_nan() {
        return Err(domain("digamma of NaN"));
    }
    if non_positive_integer(s) {
        return Err(Error::Pole {
            function: "digamma",
            at: crate::scalar::to_f64(s),
        });
    }
    if s < T::zero() {
        // ψ(1-s) - ψ(s) = π cot(πs)
        let reflected = digamma(T::one() - s)?;
        return Ok(reflected - T::PI() * cos_pi(s) / sin_pi(s));
    }
    let floor = lit::<T>(DIGAMMA_FLOOR);
    let mut z = s;
    let mut acc = T::zero();
    while z < floor {
        acc = acc - z.recip();
        z = z + T::one();
    }
    let half = lit::<T>(0.5);
    acc = acc + z.ln() - half / z;
    let z2 = z * z;
    let mut zpow = z2;
    for j in 1..=DIGAMMA_TERMS {
        let b: T = bernoulli_float(2 * j).expect("within table");
        acc = acc - b / (int::<T>(2 * j as i64) * zpow);
        zpow = zpow * z2;
    }
    Ok(acc)
}

/// `ψ^(n)(a) = (-1)^(n-1) n! ζ(n+1, a)` for `n >= 1`, `a > 0`.
pub fn polygamma<T: Real>(n: u32, a: T) -> Result<T> {
    if n == 0 {
        return Err(domain("polygamma order must be >= 1; use digamma for n = 0"));
    }
    if a.is_nan() || a <= T::zero() {
        return Err(domain(format!("polygamma requires a > 0, got {a}")));
    }
    let z = hurwitz_zeta(int::<T>(n as i64 + 1), a)?;
    let sign = if n % 2 == 1 { T::one() } else { -T::one() };
    Ok(sign * factorial::<T>(n as u64) * z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::numbers::harmonic;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn gamma_integers_and_half() {
        assert_eq!(gamma_fn(5.0_f64).unwrap(), 24.0);
        assert_eq!(gamma_fn(1.0_f64).unwrap(), 1.0);
        assert!(rel(gamma_fn(0.5_f64).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma_fn(-0.5_f64).unwrap(), -2.0 * PI.sqrt()) < 1e-14);
    }

    #[test]
    fn poles() {
        assert!(matches!(gamma_fn(0.0_f64), Err(Error::Pole { .. })));
        assert!(matches!(gamma_fn(-3.0_f64), Err(Error::Pole { .. })));
        assert!(matches!(digamma(-1.0_f64), Err(Error::Pole { .. })));
        assert!(matches!(log_gamma(-0.5_f64), Err(Error::Domain(_))));
        assert!(matches!(polygamma(1, 0.0_f64), Err(Error::Domain(_))));
    }

    #[test]
    fn log_gamma_reference_values() {
        // 30-digit reference values
        let cases = [
            (1e-3, 6.907_178_885_383_853),
            (0.25, 1.288_022_524_698_077_5),
            (2.5, 0.284_682_870_472_919_2),
            (7.3, 7.147_892_523_022_249),
            (49.5, 142.617_282_821_145_98),
        ];
        for (s, want) in cases {
            let got = log_gamma(s).unwrap();
            assert!(rel(got, want) < 1e-13, "lnΓ({s}) = {got}, want {want}");
        }
        assert!(log_gamma(1.0_f64).unwrap().abs() < 1e-14);
        assert!(log_gamma(2.0_f64).unwrap().abs() < 1e-14);
    }

    #[test]
    fn gamma_recurrence() {
        for &s in &[0.3_f64, 1.7, 6.5] {
            let r = gamma_fn(s + 1.0).unwrap() / gamma_fn(s).unwrap();
            assert!(rel(r, s) < 1e-12);
        }
    }

    #[test]
    fn gamma_reflection() {
        for &s in &[0.2_f64, 0.5, 0.9] {
            let v = gamma_fn(s).unwrap() * gamma_fn(1.0 - s).unwrap() * (PI * s).sin() / PI;
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn digamma_and_harmonic_numbers() {
        let g = MathConstants::<f64>::new().euler_gamma;
        for n in 1..=10u64 {
            let d = digamma(n as f64).unwrap() + g - harmonic::<f64>(n - 1);
            assert!(d.abs() < 1e-12, "n = {n}: {d}");
        }
        assert!((digamma(4.0_f64).unwrap() + g - 11.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn digamma_quarter_points() {
        // ψ(1/4) = -γ - π/2 - 3 ln 2,  ψ(3/4) = -γ + π/2 - 3 ln 2
        let g = MathConstants::<f64>::new().euler_gamma;
        let l2 = 2.0_f64.ln();
        assert!((digamma(0.25_f64).unwrap() - (-g - PI / 2.0 - 3.0 * l2)).abs() < 1e-13);
        assert!((digamma(0.75_f64).unwrap() - (-g + PI / 2.0 - 3.0 * l2)).abs() < 1e-13);
        // reflection branch: ψ(-1/2) = 2 - γ - 2 ln 2
        assert!((digamma(-0.5_f64).unwrap() - (2.0 - g - 2.0 * l2)).abs() < 1e-13);
    }

    #[test]
    fn polygamma_values() {
        assert!((polygamma(1, 1.0_f64).unwrap() - PI * PI / 6.0).abs() < 1e-13);
        // ψ'(1/4) - ψ'(3/4) = 16 G
        let catalan = 0.915_965_594_177_219_f64;
        let d = polygamma(1, 0.25_f64).unwrap() - polygamma(1, 0.75_f64).unwrap();
        assert!((d - 16.0 * catalan).abs() < 1e-12);
        let zeta3 = 1.202_056_903_159_594_3_f64;
        assert!((polygamma(2, 1.0_f64).unwrap() + 2.0 * zeta3).abs() < 1e-13);
    }

    #[test]
    fn single_precision_smoke() {
        let g = gamma_fn(4.5_f32).unwrap();
        assert!((g - 11.631_728).abs() < 1e-4);
        let d = digamma(1.0_f32).unwrap();
        assert!((d + 0.577_215_7).abs() < 1e-5);
    }
}
