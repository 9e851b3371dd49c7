//! Seeded random algebras for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{rat, Mat};

pub const MAX_RANDOM_DIM: usize = 16;

/// Each entry is nonzero with probability `density`; nonzero entries are
/// `±p/q` with `p` in `1..=4` and `q` in `1..=3`. The same arguments always
/// give the same algebra.
pub fn random_algebra(dim: usize, density: f64, seed: u64) -> Result<EvolutionAlgebra> {
    if !(1..=MAX_RANDOM_DIM).contains(&dim) {
        return Err(Error::Precondition(format!(
            "dimension {dim} outside 1..={MAX_RANDOM_DIM}"
        )));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Precondition(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..dim * dim)
        .map(|_| {
            if rng.random_bool(density) {
                let p: i64 = rng.random_range(1..=4);
                let q: i64 = rng.random_range(1..=3);
                let sign = if rng.random_bool(0.5) { -1 } else { 1 };
                rat(sign * p, q)
            } else {
                rat(0, 1)
            }
        })
        .collect();
    EvolutionAlgebra::with_default_labels(Mat::from_vec(dim, dim, data)?)
}
