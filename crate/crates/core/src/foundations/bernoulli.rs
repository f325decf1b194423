//! Exact Bernoulli numbers.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Highest index held by the shared table.
pub const BERNOULLI_CAPACITY: usize = 64;

/// Exact rationals `B_0 ..= B_max` with the convention `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    /// Builds `B_0 ..= B_max` from `sum_{i=0}^{n} C(n+1, i) B_i = 0`.
    pub fn new(max: usize) -> Self {
        let mut values: Vec<BigRational> = Vec::with_capacity(max + 1);
        values.push(BigRational::one());
        for n in 1..=max {
            if n > 1 && n % 2 == 1 {
                values.push(BigRational::zero());
                continue;
            }
            // binomial C(n+1, i), built incrementally
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (i, b) in values.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(n + 1 - i) / BigInt::from(i + 1);
            }
            values.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        Self { values }
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Result<&BigRational> {
        self.values.get(n).ok_or(Error::Capacity {
            requested: n,
            capacity: self.max_index(),
        })
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

static TABLE: LazyLock<BernoulliTable> = LazyLock::new(|| BernoulliTable::new(BERNOULLI_CAPACITY));

/// `B_{2j} / (2j)!` for `j = 0 ..= capacity/2`, rounded once from exact values.
static EM_COEFFS: LazyLock<Vec<f64>> = LazyLock::new(|| {
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(BERNOULLI_CAPACITY / 2 + 1);
    for n in 0..=BERNOULLI_CAPACITY {
        if n > 0 {
            fact *= BigInt::from(n);
        }
        if n % 2 == 0 {
            let q = &TABLE.values[n] / BigRational::from_integer(fact.clone());
            out.push(q.to_f64().expect("finite Bernoulli ratio"));
        }
    }
    out
});

/// Shared table, built on first access.
pub fn table() -> &'static BernoulliTable {
    &TABLE
}

/// Exact `B_n`.
pub fn bernoulli(n: usize) -> Result<BigRational> {
    TABLE.get(n).cloned()
}

/// `B_n` rounded to `T`.
pub fn bernoulli_float<T: Real>(n: usize) -> Result<T> {
    let b = TABLE.get(n)?;
    Ok(lit(b.to_f64().expect("finite Bernoulli number")))
}

/// `B_{2j} / (2j)!` rounded to `T`; the Euler–Maclaurin and Stirling weights.
pub(crate) fn even_over_factorial<T: Real>(j: usize) -> Result<T> {
    EM_COEFFS.get(j).map(|&v| lit(v)).ok_or(Error::Capacity {
        requested: 2 * j,
        capacity: BERNOULLI_CAPACITY,
    })
}
