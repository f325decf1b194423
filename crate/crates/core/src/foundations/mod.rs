//! Bernoulli numbers, Γ-family functions, harmonic numbers, Pochhammer symbols.

pub mod bernoulli;
pub mod gamma;
pub mod numbers;

pub use bernoulli::{bernoulli, bernoulli_float, BernoulliTable, BERNOULLI_CAPACITY};
pub use gamma::{digamma, gamma_fn, log_gamma, polygamma};
pub use numbers::{harmonic, pochhammer, pochhammer_sderiv, MathConstants};
pub(crate) use numbers::{binomial, factorial};
