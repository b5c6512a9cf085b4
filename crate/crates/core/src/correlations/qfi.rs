use super::sld::SldOperator;
use crate::chirality::Party;
use crate::qmat::{
    commutator, embed_operator, matrix_log_on_support, partial_trace, uhlmann_fidelity,
    DensityMatrix, Matrix, Partition, C64, DEFAULT_CUTOFF,
};
use crate::Result;

/// `F_H = -Tr([H, rho] R^{-1}([H, rho]))`. On a pure state this is four
/// times the variance of `H`.
pub fn qfi(rho: &DensityMatrix, h: &Matrix) -> f64 {
    let c = commutator(h, rho.data());
    let x = SldOperator::new(rho).apply(&c);
    -(c * x).trace().re
}

/// `K_party = -log rho_party` embedded on the full space.
pub fn modular_hamiltonian(rho: &DensityMatrix, split: &Partition, party: Party) -> Result<Matrix> {
    split.expect_groups(2, rho.n_subsystems())?;
    let group = match party {
        Party::A => &split.groups()[0],
        Party::B => &split.groups()[1],
    };
    let marginal = partial_trace(rho, group)?;
    embed_operator(&-matrix_log_on_support(&marginal, DEFAULT_CUTOFF), rho.dims(), group)
}

/// Intrinsic interferometric power `F^(party)`: the QFI of `rho_AB` for the
/// modular Hamiltonian of that party.
pub fn intrinsic_ip(rho: &DensityMatrix, split: &Partition, party: Party) -> Result<f64> {
    Ok(qfi(rho, &modular_hamiltonian(rho, split, party)?))
}

/// `2 (1 - sqrt F(rho, e^{-iHt} rho e^{iHt})) / t^2`, the squared Bures
/// distance per unit step squared.
pub fn bures_sensitivity(rho: &DensityMatrix, h: &Matrix, step: f64) -> Result<f64> {
    let u = (h * C64::new(0.0, -step)).exp();
    let moved = rho.conjugated_by(&u);
    let f = uhlmann_fidelity(rho, &moved)?;
    Ok(2.0 * (1.0 - f.sqrt()) / (step * step))
}

/// Ratio `qfi / bures_sensitivity` on a reference state; used as the single
/// calibration constant between the two.
pub fn bures_constant(reference: &DensityMatrix, h: &Matrix, step: f64) -> Result<f64> {
    Ok(qfi(reference, h) / bures_sensitivity(reference, h, step)?)
}
