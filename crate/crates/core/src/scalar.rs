//! Scalar abstraction shared by every evaluator.
//!
//! All numerics in this crate are written against [`Real`] so the same code
//! runs in `f32` or `f64`. Exact arithmetic (Bernoulli numbers) uses
//! `BigRational` and is converted on demand.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + Sum
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(v: f64) -> T {
    T::from_f64(v).expect("f64 literal representable in scalar type")
}

/// Converts an integer into `T`.
#[inline]
pub fn int<T: Real>(n: i64) -> T {
    T::from_i64(n).expect("integer representable in scalar type")
}

#[inline]
pub(crate) fn to_f64<T: Real>(v: T) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Returns `Some(n)` when `v` is exactly an integer that fits in `i64`.
pub(crate) fn as_integer<T: Real>(v: T) -> Option<i64> {
    if v.is_finite() && v.fract() == T::zero() && v.abs() < lit(9.0e15) {
        v.to_i64()
    } else {
        None
    }
}

/// `sin(πv)` with exact argument reduction for integers and half-integers.
pub fn sin_pi<T: Real>(v: T) -> T {
    let two = lit::<T>(2.0);
    let r = v - two * (v / two).floor(); // in [0, 2)
    if r == T::zero() || r == T::one() {
        return T::zero();
    }
    if r == lit(0.5) {
        return T::one();
    }
    if r == lit(1.5) {
        return -T::one();
    }
    (T::PI() * r).sin()
}

/// `cos(πv)` with exact argument reduction for integers and half-integers.
pub fn cos_pi<T: Real>(v: T) -> T {
    sin_pi(v + lit(0.5))
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy)]
pub(crate) struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Real> CompensatedSum<T> {
    pub(crate) fn new() -> Self {
        Self {
            sum: T::zero(),
            carry: T::zero(),
        }
    }

    pub(crate) fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry = self.carry + ((self.sum - t) + v);
        } else {
            self.carry = self.carry + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> T {
        self.sum + self.carry
    }
}

/// `(sin(k·x), cos(k·x))` for a (possibly large) integer multiplier `k`.
///
/// The product `k·x` is split into its rounded value and the exact rounding
/// error (via `mul_add`) so the phase stays accurate for `k` in the millions.
pub(crate) fn sin_cos_multiple<T: Real>(k: T, x: T) -> (T, T) {
    let p = k * x;
    let e = k.mul_add(x, -p);
    let (s, c) = p.sin_cos();
    (s + e * c, c - e * s)
}
