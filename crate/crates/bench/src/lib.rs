//! Fixed inputs shared by the benchmarks.

use chiralkit::experiments::{sample_mixed_state, sample_pure_vector};
use chiralkit::qmat::{DensityMatrix, Vector};
use chiralkit::rng::substream;

pub fn mixed(dims: &[usize], seed: u64) -> DensityMatrix {
    sample_mixed_state(dims, &mut substream(seed, 0))
}

pub fn pure(d: usize, seed: u64) -> Vector {
    sample_pure_vector(d, &mut substream(seed, 0))
}
