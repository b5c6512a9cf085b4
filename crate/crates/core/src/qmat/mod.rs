//! Dense complex-matrix substrate.
//!
//! Density matrices carry the list of subsystem dimensions they are defined
//! on. The first subsystem is the most significant factor of the Kronecker
//! product, so a computational-basis index `i` of a `(d0, d1, d2)` system
//! decomposes as `i = i0 * d1 * d2 + i1 * d2 + i2`.

mod linalg;
mod partition;
mod subsystem;

use nalgebra::{DMatrix, DVector};
pub use num_complex::Complex64 as C64;

use crate::{Error, Result};

pub use linalg::{
    anticommutator, commutator, dagger, eig_hermitian, expect, frobenius_norm, imaginary_power,
    is_hermitian, matrix_log_on_support, max_abs, support_threshold,
    trace_norm, uhlmann_fidelity, EigenDecomposition, DEFAULT_CUTOFF,
};
pub use partition::Partition;
pub use subsystem::{
    embed_operator, partial_trace, partial_trace_matrix, partial_transpose, partial_transpose_matrix,
    permute_vector, purify, subset_offsets, tensor_product, Purification,
};

pub type Matrix = DMatrix<C64>;
pub type Vector = DVector<C64>;

/// Tolerance used by [`DensityMatrix::new`] for the Hermiticity, positivity
/// and trace checks.
pub const STATE_TOLERANCE: f64 = 1e-10;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn identity(d: usize) -> Matrix {
    Matrix::identity(d, d)
}

/// Dense Hermitian, positive semidefinite, unit-trace matrix tagged with its
/// subsystem dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    data: Matrix,
}

impl DensityMatrix {
    /// Validates `data` against the density-matrix invariants at
    /// [`STATE_TOLERANCE`].
    pub fn new(dims: Vec<usize>, data: Matrix) -> Result<Self> {
        Self::with_tolerance(dims, data, STATE_TOLERANCE)
    }

    pub fn with_tolerance(dims: Vec<usize>, data: Matrix, tol: f64) -> Result<Self> {
        check_dims(&dims, &data)?;
        let herm = linalg::hermiticity_deviation(&data);
        if herm > tol {
            return Err(Error::NotHermitian { deviation: herm });
        }
        let tr = data.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let eig = eig_hermitian(&data)?;
        let min = eig.eigenvalues[0];
        if min < -tol {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {min:e} below tolerance {tol:e}"
            )));
        }
        Ok(Self { dims, data })
    }

    /// Skips validation. Callers guarantee the invariants hold up to
    /// rounding.
    pub(crate) fn from_parts_unchecked(dims: Vec<usize>, data: Matrix) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), data.nrows());
        Self { dims, data }
    }

    /// `|psi><psi|` for a (re)normalized vector.
    pub fn from_pure(dims: Vec<usize>, psi: &Vector) -> Result<Self> {
        let d: usize = dims.iter().product();
        if psi.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for dims {:?}",
                psi.len(),
                dims
            )));
        }
        let norm = psi.norm();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero vector".into()));
        }
        let v = psi / C64::from(norm);
        let data = &v * v.adjoint();
        Ok(Self { dims, data })
    }

    pub fn maximally_mixed(dims: Vec<usize>) -> Self {
        let d: usize = dims.iter().product();
        let data = Matrix::identity(d, d) / C64::from(d as f64);
        Self { dims, data }
    }

    /// Probabilistic mixture `sum_i w_i |v_i><v_i|`; weights must sum to one.
    pub fn from_ensemble(dims: Vec<usize>, ensemble: &[(f64, Vector)]) -> Result<Self> {
        let d: usize = dims.iter().product();
        let mut data = Matrix::zeros(d, d);
        for (w, v) in ensemble {
            if v.len() != d {
                return Err(Error::DimensionMismatch(format!(
                    "ensemble vector of length {} for dims {:?}",
                    v.len(),
                    dims
                )));
            }
            let v = v / C64::from(v.norm());
            data += (&v * v.adjoint()) * C64::from(*w);
        }
        Self::new(dims, data)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn data(&self) -> &Matrix {
        &self.data
    }

    pub fn into_matrix(self) -> Matrix {
        self.data
    }

    pub fn n_subsystems(&self) -> usize {
        self.dims.len()
    }

    pub fn eigen(&self) -> EigenDecomposition {
        // validated on construction, so this cannot fail
        eig_hermitian(&self.data).expect("density matrix is Hermitian")
    }

    /// Entry-wise complex conjugate in the computational product basis.
    pub fn conjugate(&self) -> Self {
        Self {
            dims: self.dims.clone(),
            data: self.data.map(|z| z.conj()),
        }
    }

    /// `U rho U^dagger` for a unitary on the full space.
    pub fn conjugated_by(&self, u: &Matrix) -> Self {
        Self {
            dims: self.dims.clone(),
            data: u * &self.data * u.adjoint(),
        }
    }

    /// `(1 - eps) rho + eps I/d`, the full-rank regularization.
    pub fn mix_with_identity(&self, eps: f64) -> Self {
        let d = self.dim();
        let data = &self.data * C64::from(1.0 - eps)
            + Matrix::identity(d, d) * C64::from(eps / d as f64);
        Self {
            dims: self.dims.clone(),
            data,
        }
    }

    pub fn purity(&self) -> f64 {
        (&self.data * &self.data).trace().re
    }

    /// Returns the same matrix relabelled with different subsystem dims.
    pub fn with_dims(&self, dims: Vec<usize>) -> Result<Self> {
        check_dims(&dims, &self.data)?;
        Ok(Self {
            dims,
            data: self.data.clone(),
        })
    }
}

fn check_dims(dims: &[usize], data: &Matrix) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::DimensionMismatch(format!("invalid dims {dims:?}")));
    }
    let d: usize = dims.iter().product();
    if data.nrows() != d || data.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {}x{} but dims {:?} give {}",
            data.nrows(),
            data.ncols(),
            dims,
            d
        )));
    }
    Ok(())
}

/// Single-qubit Pauli matrices in the order (I, X, Y, Z).
pub fn pauli_matrices() -> [Matrix; 4] {
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    [
        Matrix::from_row_slice(2, 2, &[l, o, o, l]),
        Matrix::from_row_slice(2, 2, &[o, l, l, o]),
        Matrix::from_row_slice(2, 2, &[o, -i, i, o]),
        Matrix::from_row_slice(2, 2, &[l, o, o, -l]),
    ]
}

/// Kronecker product of a list of local operators.
pub fn kron_all(ops: &[Matrix]) -> Matrix {
    ops.iter()
        .fold(Matrix::identity(1, 1), |acc, op| acc.kronecker(op))
}

/// Computational basis vector `|index>` of dimension `d`.
pub fn basis_vector(d: usize, index: usize) -> Vector {
    let mut v = Vector::zeros(d);
    v[index] = C64::from(1.0);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_trace() {
        let m = Matrix::identity(2, 2);
        assert!(matches!(
            DensityMatrix::new(vec![2], m),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        let m = Matrix::from_diagonal(&Vector::from_vec(vec![c(1.5, 0.0), c(-0.5, 0.0)]));
        assert!(DensityMatrix::new(vec![2], m).is_err());
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = Matrix::identity(2, 2) * c(0.5, 0.0);
        m[(0, 1)] = c(0.1, 0.0);
        assert!(matches!(
            DensityMatrix::new(vec![2], m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn rejects_dim_mismatch() {
        let m = Matrix::identity(4, 4) * c(0.25, 0.0);
        assert!(DensityMatrix::new(vec![2, 3], m).is_err());
    }

    #[test]
    fn conjugate_of_y_state() {
        let [id, _, y, _] = pauli_matrices();
        let plus = DensityMatrix::new(vec![2], (&id + &y) * c(0.5, 0.0)).unwrap();
        let minus = (&id - &y) * c(0.5, 0.0);
        assert!((plus.conjugate().data() - minus).norm() < 1e-15);
        assert_eq!(plus.conjugate().conjugate(), plus);
    }

    #[test]
    fn conjugate_preserves_spectrum_and_real_states() {
        let real = DensityMatrix::new(
            vec![2],
            Matrix::from_row_slice(2, 2, &[c(0.7, 0.0), c(0.2, 0.0), c(0.2, 0.0), c(0.3, 0.0)]),
        )
        .unwrap();
        assert_eq!(real.conjugate(), real);
        let st = DensityMatrix::new(
            vec![2],
            Matrix::from_row_slice(2, 2, &[c(0.6, 0.0), c(0.1, 0.3), c(0.1, -0.3), c(0.4, 0.0)]),
        )
        .unwrap();
        let a = st.eigen().eigenvalues;
        let b = st.conjugate().eigen().eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-14);
        }
    }
}
