//! Quantum Fisher information, classical-quantum structure and the bounds
//! tying them to the modular-flow chirality measure.

mod bounds;
mod cq;
mod qfi;
mod sld;

pub use bounds::{
    c_constant, check_gamma_qfi_bound, gamma_qfi_report, project_to_simplex, simplex_entropy_argmax,
    simplex_entropy_max, GammaQfiReport, BOUND_SLACK, C_QUBIT,
};
pub use cq::{
    correlation_matrix, is_classical_quantum, makhlin_invariants, marginal_commutator,
    noncommutativity_verdict, CqDecomposition, CqVerdict, NoncommutativityReport, Verdict,
    DEGENERACY_GAP,
};
pub use qfi::{bures_constant, bures_sensitivity, intrinsic_ip, modular_hamiltonian, qfi};
pub use sld::{sld_apply, sld_integral_form, SldOperator, INTEGRAL_MIN_EIGENVALUE};
