use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::scalar::{int, lit, Real};

/// Trigonometric kernel of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trig {
    Sin,
    Cos,
}

impl Trig {
    pub fn name(self) -> &'static str {
        match self {
            Trig::Sin => "sin",
            Trig::Cos => "cos",
        }
    }
}

/// The eight series families with closed forms at integer orders.
///
/// | family | sign        | kernel | denominators | α      | interval    |
/// |--------|-------------|--------|--------------|--------|-------------|
/// | T1     | +           | sin    | n            | 2m     | (0, 2π)     |
/// | T2     | +           | cos    | n            | 2m − 1 | (0, 2π)     |
/// | T3     | (−1)^{n−1}  | sin    | n            | 2m     | (−π, π)     |
/// | T4     | (−1)^{n−1}  | cos    | n            | 2m − 1 | (−π, π)     |
/// | T5     | +           | sin    | 2n − 1       | 2m     | (0, π)      |
/// | T6     | +           | cos    | 2n − 1       | 2m − 1 | (0, π)      |
/// | T7     | (−1)^{n−1}  | sin    | 2n − 1       | 2m − 1 | (−π/2, π/2) |
/// | T8     | (−1)^{n−1}  | cos    | 2n − 1       | 2m     | (−π/2, π/2) |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::T1,
        Family::T2,
        Family::T3,
        Family::T4,
        Family::T5,
        Family::T6,
        Family::T7,
        Family::T8,
    ];

    /// `(alternating, trig, odd_denominators)`.
    pub fn shape(self) -> (bool, Trig, bool) {
        match self {
            Family::T1 => (false, Trig::Sin, false),
            Family::T2 => (false, Trig::Cos, false),
            Family::T3 => (true, Trig::Sin, false),
            Family::T4 => (true, Trig::Cos, false),
            Family::T5 => (false, Trig::Sin, true),
            Family::T6 => (false, Trig::Cos, true),
            Family::T7 => (true, Trig::Sin, true),
            Family::T8 => (true, Trig::Cos, true),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::T1 => "T1",
            Family::T2 => "T2",
            Family::T3 => "T3",
            Family::T4 => "T4",
            Family::T5 => "T5",
            Family::T6 => "T6",
            Family::T7 => "T7",
            Family::T8 => "T8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| domain(format!("unknown series family '{s}' (expected T1..T8)")))
    }
}

/// A concrete series `Σ s_n f(b_n x) / b_n^α` at integer order `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeriesSpec {
    pub alternating: bool,
    pub trig: Trig,
    pub odd_denominators: bool,
    pub m: u32,
}

impl SeriesSpec {
    pub fn new(alternating: bool, trig: Trig, odd_denominators: bool, m: u32) -> Result<Self> {
        if m < 1 {
            return Err(domain("series order m must be at least 1"));
        }
        Ok(Self {
            alternating,
            trig,
            odd_denominators,
            m,
        })
    }

    pub fn from_family(family: Family, m: u32) -> Result<Self> {
        let (alternating, trig, odd) = family.shape();
        Self::new(alternating, trig, odd, m)
    }

    pub fn family(&self) -> Family {
        match (self.alternating, self.trig, self.odd_denominators) {
            (false, Trig::Sin, false) => Family::T1,
            (false, Trig::Cos, false) => Family::T2,
            (true, Trig::Sin, false) => Family::T3,
            (true, Trig::Cos, false) => Family::T4,
            (false, Trig::Sin, true) => Family::T5,
            (false, Trig::Cos, true) => Family::T6,
            (true, Trig::Sin, true) => Family::T7,
            (true, Trig::Cos, true) => Family::T8,
        }
    }

    /// Exponent of the denominators.
    pub fn alpha(&self) -> u32 {
        let m2 = 2 * self.m;
        match (self.alternating && self.odd_denominators, self.trig) {
            (false, Trig::Sin) | (true, Trig::Cos) => m2,
            (false, Trig::Cos) | (true, Trig::Sin) => m2 - 1,
        }
    }

    /// Open interval on which the closed form holds.
    pub fn interval<T: Real>(&self) -> (T, T) {
        let pi = T::PI();
        match (self.alternating, self.odd_denominators) {
            (false, false) => (T::zero(), pi * lit(2.0)),
            (true, false) => (-pi, pi),
            (false, true) => (T::zero(), pi),
            (true, true) => (-pi * lit(0.5), pi * lit(0.5)),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.alternating
    }

    /// Human-readable interval, e.g. `(0, 2π)`.
    pub fn interval_label(&self) -> &'static str {
        match (self.alternating, self.odd_denominators) {
            (false, false) => "(0, 2π)",
            (true, false) => "(-π, π)",
            (false, true) => "(0, π)",
            (true, true) => "(-π/2, π/2)",
        }
    }

    /// Rejects `x` outside the interval or within `margin · length` of an endpoint.
    pub fn check_x<T: Real>(&self, x: T, margin: f64) -> Result<()> {
        let (lo, hi) = self.interval::<T>();
        let pad = (hi - lo) * lit(margin);
        if !x.is_finite() || x <= lo + pad || x >= hi - pad {
            return Err(domain(format!(
                "x = {x} outside {} for family {} (endpoint margin {margin:e} of the interval length)",
                self.interval_label(),
                self.family()
            )));
        }
        Ok(())
    }

    /// `points` interior abscissae, evenly spaced and offset 5% of the interval
    /// length from each endpoint.
    pub fn interior_grid<T: Real>(&self, points: usize) -> Vec<T> {
        let (lo, hi) = self.interval::<T>();
        let len = hi - lo;
        if points == 1 {
            return vec![lo + len * lit(0.5)];
        }
        let last = int::<T>(points as i64 - 1);
        (0..points)
            .map(|i| lo + len * (lit::<T>(0.05) + lit::<T>(0.9) * int::<T>(i as i64) / last))
            .collect()
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (m = {}, α = {})", self.family(), self.m, self.alpha())
    }
}
