/// Knobs shared by the closed-form evaluators and the oracles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// Target accuracy for oracle summation.
    pub tol: f64,
    /// Largest accepted series order `m`.
    pub max_m: u32,
    /// Points closer than `endpoint_margin · length` to an interval endpoint are refused.
    pub endpoint_margin: f64,
    /// Term cap for direct / accelerated / Cesàro summation.
    pub direct_term_cap: u64,
    /// Term cap for the power-series oracles.
    pub power_series_term_cap: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_m: 8,
            endpoint_margin: 1e-9,
            direct_term_cap: 10_000_000,
            power_series_term_cap: 200,
        }
    }
}

impl EvalConfig {
    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_m(mut self, max_m: u32) -> Self {
        self.max_m = max_m;
        self
    }
}
