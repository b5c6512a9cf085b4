//! Chirality measures.
//!
//! Nested-commutator functionals of modular Hamiltonians are odd under
//! complex conjugation and additive under tensor products; the chiral
//! log-distance is even and is estimated by alternating optimization over
//! local unitaries of a purification.

mod logdist;
mod modular;
mod pauli;
mod report;

pub use logdist::{
    chiral_log_distance, purified_overlap, LogDistance, LogDistanceOptions, OptimizationResult,
    CERTIFY_TOLERANCE,
};
pub use modular::{
    modular_commutator, modular_commutator_with_cutoff, GammaIntegral, Measured, ModularSet,
    Party, DEFAULT_HALF_WIDTH, DEFAULT_PANELS, RESIDUE_WARNING,
};
pub use pauli::{pauli_log_distance, PauliLogDistance};
pub use report::{measure_report, MeasureReport};

use crate::qmat::{DensityMatrix, Partition};
use crate::Result;

pub fn j2(rho: &DensityMatrix, split: &Partition) -> Result<f64> {
    Ok(ModularSet::new(rho, split)?.j2().value)
}

pub fn j3(rho: &DensityMatrix, split: &Partition) -> Result<f64> {
    Ok(ModularSet::new(rho, split)?.j3().value)
}

pub fn j3_prime(rho: &DensityMatrix, split: &Partition) -> Result<f64> {
    Ok(ModularSet::new(rho, split)?.j3_prime().value)
}

pub fn gamma_s(rho: &DensityMatrix, split: &Partition, s: f64) -> Result<f64> {
    Ok(ModularSet::new(rho, split)?.gamma_s(s).value)
}

pub fn phi_s(rho: &DensityMatrix, split: &Partition, s: f64) -> Result<f64> {
    Ok(ModularSet::new(rho, split)?.phi_s(s).value)
}

pub fn gamma_integral(
    rho: &DensityMatrix,
    split: &Partition,
    half_width: f64,
    panels: usize,
) -> Result<GammaIntegral> {
    ModularSet::new(rho, split)?.gamma_integral(half_width, panels)
}
