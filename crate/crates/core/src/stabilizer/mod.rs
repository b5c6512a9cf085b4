//! Qubit stabilizer formalism over GF(2).
//!
//! Pauli strings are phase-free symplectic pairs; groups are stored as
//! independent commuting generators with explicit signs.

mod enumerate;
pub mod f2;
mod group;
mod magic;
mod pauli;

pub use enumerate::{lagrangian_tableaux, stabilizer_states, MAX_ENUMERATION_QUBITS};
pub use f2::{f2_solve, BitVec, F2Solution, F2System};
pub use group::{conjugation_pauli, ConjugationSolution, StabilizerGroup};
pub use magic::{
    pauli_site_unitaries, stabilizer_fidelity, stabilizer_nullity, verify_magic_bounds,
    MagicReport, DEFAULT_NULLITY_TOL, MAGIC_EPSILON, MAX_PAULI_QUBITS,
};
pub(crate) use magic::check_register;
pub use pauli::{PauliString, MAX_QUBITS};
