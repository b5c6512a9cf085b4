//! Chirality measures for multipartite quantum states.
//!
//! A state is chiral with respect to a partition when no product of local
//! unitaries maps it onto its complex conjugate taken in a local product
//! basis. This crate computes
//!
//! * the chiral log-distance (an optimization over local unitaries),
//! * nested-commutator measures built from modular Hamiltonians
//!   (`J2`, `J3`, `J3'`, `gamma_s`, `phi_s`, `gamma`) and the tripartite
//!   modular commutator,
//! * the stabilizer-side quantities they bound: Pauli-restricted
//!   log-distance, stabilizer nullity and stabilizer fidelity,
//! * the quantum Fisher information machinery used for the intrinsic
//!   interferometric power and its bound by `gamma`,
//!
//! together with the random-state experiments and an acceptance suite that
//! checks the structural claims numerically.
//!
//! All dense linear algebra goes through [`qmat`]; matrices are
//! `nalgebra::DMatrix<Complex64>`.

pub mod acceptance;
pub mod chirality;
pub mod correlations;
pub mod error;
pub mod experiments;
pub mod qmat;
pub mod quadrature;
pub mod rng;
pub mod stabilizer;
pub mod statefile;
pub mod states;

pub use error::{Error, Result};
pub use qmat::{DensityMatrix, EigenDecomposition, Matrix, Partition, Vector, C64};
