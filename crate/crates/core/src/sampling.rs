//! Reproducible random parameter sets for fuzzing closed forms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::params::Params;
use crate::recurrence::characteristic_roots;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 42;

/// Minimum distance kept between `d` and either characteristic root, and
/// between `a + b` (resp. `a - b`) and the sum denominators' zeros.
const MARGIN: f64 = 0.05;

/// Draws `a, b` from `(0.1, 2)`, `c` from `[0, 2]`, `d` from `[0.01, 2)`
/// away from both roots, and initial values from `(-5, 5)`.
#[derive(Debug, Clone)]
pub struct ParamSampler {
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn params(&mut self) -> Params {
        loop {
            let a = self.rng.random_range(0.1..2.0);
            let b = self.rng.random_range(0.1..2.0);
            let c = self.rng.random_range(0.0..=2.0);
            let d = self.rng.random_range(0.01..2.0);
            let g0 = self.rng.random_range(-5.0..5.0);
            let g1 = self.rng.random_range(-5.0..5.0);
            let p = Params::new(a, b, c, d, g0, g1);
            let Ok((alpha, beta)) = characteristic_roots(&p) else {
                continue;
            };
            let far_from_roots = (d - alpha).abs() > MARGIN && (d - beta).abs() > MARGIN;
            let sums_ok = (a + b - 1.0).abs() > MARGIN && (a - b + 1.0).abs() > MARGIN;
            if far_from_roots && sums_ok {
                return p;
            }
        }
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn index(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }
}
