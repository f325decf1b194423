//! Harmonic numbers, Pochhammer symbols and the constants they lean on.

use crate::scalar::{int, lit, CompensatedSum, Real};

/// Constants used across the evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathConstants<T> {
    /// Euler–Mascheroni constant γ.
    pub euler_gamma: T,
    /// `ln(2π)`.
    pub log_2pi: T,
    pub pi: T,
}

impl<T: Real> MathConstants<T> {
    pub fn new() -> Self {
        Self {
            euler_gamma: lit(0.577_215_664_901_532_9),
            log_2pi: lit(1.837_877_066_409_345_5),
            pi: T::PI(),
        }
    }
}

impl<T: Real> Default for MathConstants<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// `H_n = sum_{k=1}^{n} 1/k`, with `H_0 = 0`.
pub fn harmonic<T: Real>(n: u64) -> T {
    let mut acc = CompensatedSum::new();
    for k in (1..=n).rev() {
        acc.add(T::one() / T::from_u64(k).expect("harmonic index"));
    }
    acc.value()
}

/// Rising factorial `(s)_n = s (s+1) ... (s+n-1)`; `(s)_0 = 1`.
pub fn pochhammer<T: Real>(s: T, n: usize) -> T {
    (0..n).fold(T::one(), |p, i| p * (s + int(i as i64)))
}

/// `d/ds (s)_n` as the product-rule sum of sub-products.
///
/// Stays exact where `(s)_n` has a zero factor, which a logarithmic
/// derivative `(s)_n · sum 1/(s+i)` cannot.
pub fn pochhammer_sderiv<T: Real>(s: T, n: usize) -> T {
    if n == 0 {
        return T::zero();
    }
    let factors: Vec<T> = (0..n).map(|i| s + int(i as i64)).collect();
    // prefix[j] = prod_{i<j}, suffix[j] = prod_{i>j}
    let mut prefix = vec![T::one(); n];
    for j in 1..n {
        prefix[j] = prefix[j - 1] * factors[j - 1];
    }
    let mut acc = T::zero();
    let mut suffix = T::one();
    for j in (0..n).rev() {
        acc = acc + prefix[j] * suffix;
        suffix = suffix * factors[j];
    }
    acc
}

/// `n!` in `T`.
pub(crate) fn factorial<T: Real>(n: u64) -> T {
    (2..=n).fold(T::one(), |p, k| p * T::from_u64(k).expect("factorial index"))
}

/// Binomial coefficient `C(n, k)` in `T`.
pub(crate) fn binomial<T: Real>(n: u64, k: u64) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(T::one(), |acc, i| {
        acc * T::from_u64(n - i).unwrap() / T::from_u64(i + 1).unwrap()
    })
}
