//! Named states used by the tests, the acceptance suite and the CLI.

use rand::Rng;

use crate::experiments::{sample_haar_unitary, sample_simplex};
use crate::qmat::{
    basis_vector, c, pauli_matrices, DensityMatrix, Matrix, Vector, C64,
};
use crate::{Error, Result};

pub const EXAMPLE1_WEIGHTS: [f64; 3] = [0.5, 0.3, 0.2];
pub const EXAMPLE2_WEIGHTS: [f64; 4] = [0.05, 0.06, 0.07, 0.82];

/// `(|00> + |11>) / sqrt 2`.
pub fn bell_vector() -> Vector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Vector::from_vec(vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)])
}

pub fn bell_state() -> DensityMatrix {
    DensityMatrix::from_pure(vec![2, 2], &bell_vector()).expect("normalized")
}

/// `(|0> + e^{i pi/4} |1>) / sqrt 2`.
pub fn t_vector() -> Vector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Vector::from_vec(vec![c(s, 0.0), C64::from_polar(s, std::f64::consts::FRAC_PI_4)])
}

/// `|T>^{⊗k}`.
pub fn t_power(k: usize) -> Vector {
    (0..k).fold(Vector::from_element(1, c(1.0, 0.0)), |acc, _| acc.kronecker(&t_vector()))
}

/// `(|0...0> + |1...1>) / sqrt 2` on `n` qubits.
pub fn ghz_vector(n: usize) -> Vector {
    let d = 1usize << n;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut v = Vector::zeros(d);
    v[0] = c(s, 0.0);
    v[d - 1] = c(s, 0.0);
    v
}

/// `|0>`, `(|0> + |1>)/sqrt 2`, `(|0> + i sqrt 3 |1>)/2`: pairwise overlaps
/// whose phases cannot all be removed by a relabelling.
pub fn chiral_qubit_triple() -> [Vector; 3] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [
        Vector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]),
        Vector::from_vec(vec![c(s, 0.0), c(s, 0.0)]),
        Vector::from_vec(vec![c(0.5, 0.0), c(0.0, 3f64.sqrt() / 2.0)]),
    ]
}

fn check_weights(p: &[f64]) -> Result<()> {
    if p.iter().any(|&x| !(x > 0.0)) {
        return Err(Error::Precondition(format!("weights must be positive: {p:?}")));
    }
    if (p.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
        return Err(Error::Precondition(format!("weights must sum to 1: {p:?}")));
    }
    for (i, a) in p.iter().enumerate() {
        if p[i + 1..].iter().any(|b| (a - b).abs() < 1e-12) {
            return Err(Error::Precondition(format!("weights must be distinct: {p:?}")));
        }
    }
    Ok(())
}

fn projector(v: &Vector) -> Matrix {
    v * v.adjoint()
}

/// Qutrit-qubit state `sum_i p_i |i><i| ⊗ |psi_i><psi_i|` with the
/// [`chiral_qubit_triple`].
pub fn example1_state(p: &[f64; 3]) -> Result<DensityMatrix> {
    check_weights(p)?;
    let psi = chiral_qubit_triple();
    let mut m = Matrix::zeros(6, 6);
    for i in 0..3 {
        m += projector(&basis_vector(3, i)).kronecker(&projector(&psi[i])) * C64::from(p[i]);
    }
    DensityMatrix::new(vec![3, 2], m)
}

/// Purification `sum_i sqrt(p_i) |i>_A |i>_A' |psi_i>_B` with subsystem
/// order (A, A', B).
pub fn example1_purified_vector(p: &[f64; 3]) -> Result<Vector> {
    check_weights(p)?;
    let psi = chiral_qubit_triple();
    let mut v = Vector::zeros(18);
    for i in 0..3 {
        let term = basis_vector(3, i)
            .kronecker(&basis_vector(3, i))
            .kronecker(&psi[i]);
        v += term * C64::from(p[i].sqrt());
    }
    Ok(v)
}

pub fn example1_purified(p: &[f64; 3]) -> Result<DensityMatrix> {
    DensityMatrix::from_pure(vec![3, 3, 2], &example1_purified_vector(p)?)
}

/// Ququart-qubit state with the triple on the first three levels of A and,
/// on the fourth, the qubit state `rho_4` fixed by
/// `sum_i p_i |psi_i><psi_i| + p_4 rho_4 = I/2`, so both marginal
/// commutators vanish while the marginal on B is degenerate.
pub fn example2_state(p: &[f64; 4]) -> Result<DensityMatrix> {
    check_weights(p)?;
    let psi = chiral_qubit_triple();
    let mut partial = Matrix::zeros(2, 2);
    for i in 0..3 {
        partial += projector(&psi[i]) * C64::from(p[i]);
    }
    let rho4 = (Matrix::identity(2, 2) * C64::from(0.5) - partial) / C64::from(p[3]);
    let min_eig = rho4.clone().symmetric_eigen().eigenvalues.min();
    if min_eig < -1e-12 {
        return Err(Error::Precondition(format!(
            "weights {p:?} leave no valid completion (min eigenvalue {min_eig:.3e})"
        )));
    }
    let mut m = Matrix::zeros(8, 8);
    for i in 0..3 {
        m += projector(&basis_vector(4, i)).kronecker(&projector(&psi[i])) * C64::from(p[i]);
    }
    m += projector(&basis_vector(4, 3)).kronecker(&rho4) * C64::from(p[3]);
    DensityMatrix::new(vec![4, 2], m)
}

/// `(1 - q) I/4 + q |Phi+><Phi+|`.
pub fn werner_state(q: f64) -> DensityMatrix {
    let m = Matrix::identity(4, 4) * C64::from((1.0 - q) / 4.0) + bell_state().data() * C64::from(q);
    DensityMatrix::from_parts_unchecked(vec![2, 2], m)
}

/// `sum_ij p_ij |i><i| ⊗ |j><j|`.
pub fn classical_state(weights: &[Vec<f64>]) -> Result<DensityMatrix> {
    let da = weights.len();
    let db = weights.first().map_or(0, Vec::len);
    let mut m = Matrix::zeros(da * db, da * db);
    for (i, row) in weights.iter().enumerate() {
        if row.len() != db {
            return Err(Error::DimensionMismatch("ragged weight table".into()));
        }
        for (j, &w) in row.iter().enumerate() {
            m[(i * db + j, i * db + j)] = C64::from(w);
        }
    }
    DensityMatrix::new(vec![da, db], m)
}

/// Two-qubit state with both marginals equal to `I/2`: a Bell-diagonal
/// state with flat Dirichlet weights under random local unitaries.
pub fn random_maximally_mixed_marginals<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let w = sample_simplex(4, rng);
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bells = [
        [1.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, -1.0],
        [0.0, 1.0, 1.0, 0.0],
        [0.0, 1.0, -1.0, 0.0],
    ];
    let mut m = Matrix::zeros(4, 4);
    for (wk, b) in w.iter().zip(&bells) {
        let v = Vector::from_iterator(4, b.iter().map(|&x| c(x * s, 0.0)));
        m += projector(&v) * C64::from(*wk);
    }
    let u = sample_haar_unitary(2, rng).kronecker(&sample_haar_unitary(2, rng));
    let data = &u * m * u.adjoint();
    let data = (&data + data.adjoint()) * C64::from(0.5);
    DensityMatrix::from_parts_unchecked(vec![2, 2], data)
}

/// `(I + r . sigma) / 2`.
pub fn qubit_state(r: [f64; 3]) -> Result<DensityMatrix> {
    let [i, x, y, z] = pauli_matrices();
    let m = (i + x * C64::from(r[0]) + y * C64::from(r[1]) + z * C64::from(r[2])) * C64::from(0.5);
    DensityMatrix::new(vec![2], m)
}
