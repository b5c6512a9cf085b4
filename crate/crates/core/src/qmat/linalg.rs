use nalgebra::SVD;

use super::{DensityMatrix, Matrix, C64};
use crate::{Error, Result};

/// Relative support cutoff: eigenvalues `p <= DEFAULT_CUTOFF * p_max` are
/// treated as zero by the logarithm, imaginary powers and the SLD map.
pub const DEFAULT_CUTOFF: f64 = 1e-12;

/// Hermiticity tolerance accepted by [`eig_hermitian`], scaled by
/// `max(1, max|M_ij|)`.
const EIG_HERMITIAN_TOL: f64 = 1e-8;

/// Spectral decomposition `M = V diag(eigenvalues) V^dagger` of a Hermitian
/// matrix. Eigenvalues ascend; each eigenvector column is rotated so its
/// largest-modulus entry is real and positive.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `V diag(f(lambda)) V^dagger`.
    pub fn map<F: Fn(f64) -> C64>(&self, f: F) -> Matrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &lam) in self.eigenvalues.iter().enumerate() {
            let fj = f(lam);
            scaled.column_mut(j).scale_mut_complex(fj);
        }
        scaled * v.adjoint()
    }

    pub fn reconstruct(&self) -> Matrix {
        self.map(C64::from)
    }

    /// Expresses `op` in the eigenbasis: `V^dagger op V`.
    pub fn to_eigenbasis(&self, op: &Matrix) -> Matrix {
        self.eigenvectors.adjoint() * op * &self.eigenvectors
    }

    pub fn from_eigenbasis(&self, op: &Matrix) -> Matrix {
        &self.eigenvectors * op * self.eigenvectors.adjoint()
    }

    pub fn max_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().unwrap_or(&0.0)
    }
}

trait ScaleComplex {
    fn scale_mut_complex(&mut self, s: C64);
}

impl<S> ScaleComplex for nalgebra::Matrix<C64, nalgebra::Dyn, nalgebra::U1, S>
where
    S: nalgebra::StorageMut<C64, nalgebra::Dyn, nalgebra::U1>,
{
    fn scale_mut_complex(&mut self, s: C64) {
        for z in self.iter_mut() {
            *z *= s;
        }
    }
}

pub(crate) fn hermiticity_deviation(m: &Matrix) -> f64 {
    let mut dev = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

pub fn is_hermitian(m: &Matrix, tol: f64) -> bool {
    m.is_square() && hermiticity_deviation(m) <= tol
}

pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn frobenius_norm(m: &Matrix) -> f64 {
    m.norm()
}

pub fn dagger(m: &Matrix) -> Matrix {
    m.adjoint()
}

pub fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    a * b - b * a
}

pub fn anticommutator(a: &Matrix, b: &Matrix) -> Matrix {
    a * b + b * a
}

/// `Tr(rho X)`.
pub fn expect(rho: &Matrix, x: &Matrix) -> C64 {
    // Tr(AB) = sum_ij A_ij B_ji without forming the product
    let n = rho.nrows();
    let mut acc = C64::from(0.0);
    for i in 0..n {
        for j in 0..n {
            acc += rho[(i, j)] * x[(j, i)];
        }
    }
    acc
}

/// Hermitian eigendecomposition with ascending eigenvalues.
///
/// Rejects inputs whose anti-Hermitian part exceeds `1e-8 * max(1, max|M|)`.
/// The input is symmetrized before diagonalization.
pub fn eig_hermitian(m: &Matrix) -> Result<EigenDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition of a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let dev = hermiticity_deviation(m);
    if dev > EIG_HERMITIAN_TOL * max_abs(m).max(1.0) {
        return Err(Error::NotHermitian { deviation: dev });
    }
    let n = m.nrows();
    if n == 0 {
        return Ok(EigenDecomposition {
            eigenvalues: vec![],
            eigenvectors: Matrix::zeros(0, 0),
        });
    }
    let sym = (m + m.adjoint()) * C64::from(0.5);
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let mut eigenvectors = Matrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = eig.eigenvectors.column(src);
        let mut best = 0;
        let mut best_abs = -1.0;
        for (i, z) in col.iter().enumerate() {
            let a = z.norm();
            if a > best_abs {
                best_abs = a;
                best = i;
            }
        }
        let phase = if best_abs > 0.0 {
            col[best].conj() / C64::from(best_abs)
        } else {
            C64::from(1.0)
        };
        for i in 0..n {
            eigenvectors[(i, dst)] = col[i] * phase;
        }
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Absolute threshold below which eigenvalues count as outside the support.
pub fn support_threshold(eigenvalues: &[f64], cutoff: f64) -> f64 {
    let pmax = eigenvalues.iter().cloned().fold(0.0f64, f64::max);
    cutoff * pmax
}

/// `log rho` restricted to the support of `rho`, i.e. `-K` for the modular
/// Hamiltonian `K`. Eigenvalues at or below `cutoff * p_max` contribute
/// nothing.
pub fn matrix_log_on_support(rho: &DensityMatrix, cutoff: f64) -> Matrix {
    log_on_support(&rho.eigen(), cutoff)
}

pub(crate) fn log_on_support(eig: &EigenDecomposition, cutoff: f64) -> Matrix {
    let thr = support_threshold(&eig.eigenvalues, cutoff);
    eig.map(|p| if p > thr { C64::from(p.ln()) } else { C64::from(0.0) })
}

/// `rho^{is}` on the support of `rho`, extended by the identity on its
/// kernel, so the result is unitary on the whole space.
pub fn imaginary_power(rho: &DensityMatrix, s: f64, cutoff: f64) -> Matrix {
    imaginary_power_eig(&rho.eigen(), s, cutoff)
}

pub(crate) fn imaginary_power_eig(eig: &EigenDecomposition, s: f64, cutoff: f64) -> Matrix {
    let thr = support_threshold(&eig.eigenvalues, cutoff);
    eig.map(|p| {
        if p > thr {
            C64::from_polar(1.0, s * p.ln())
        } else {
            C64::from(1.0)
        }
    })
}

/// Sum of singular values.
pub fn trace_norm(m: &Matrix) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    let svd = SVD::new(m.clone(), false, false);
    svd.singular_values.iter().sum()
}

/// Uhlmann fidelity `(Tr sqrt(sqrt(sigma) rho sqrt(sigma)))^2`, clamped to
/// `[0, 1]`.
pub fn uhlmann_fidelity(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch(format!(
            "fidelity between dimensions {} and {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    // eigenvalues below the support cutoff are rounding noise; their square
    // roots would otherwise dominate near-unit fidelities of low-rank states
    let se = sigma.eigen();
    let thr = support_threshold(&se.eigenvalues, DEFAULT_CUTOFF);
    let sqrt_sigma = se.map(|p| C64::from(if p > thr { p.sqrt() } else { 0.0 }));
    let inner = &sqrt_sigma * rho.data() * &sqrt_sigma;
    let eig = eig_hermitian(&inner)?;
    let thr = support_threshold(&eig.eigenvalues, DEFAULT_CUTOFF);
    let root: f64 = eig
        .eigenvalues
        .iter()
        .map(|&p| if p > thr { p.sqrt() } else { 0.0 })
        .sum();
    Ok((root * root).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::super::{c, pauli_matrices, Vector};
    use super::*;

    #[test]
    fn identity_spectrum() {
        let e = eig_hermitian(&Matrix::identity(2, 2)).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 1.0]);
        let v = &e.eigenvectors;
        assert!((v.adjoint() * v - Matrix::identity(2, 2)).norm() < 1e-12);
    }

    #[test]
    fn pauli_z_spectrum() {
        let z = &pauli_matrices()[3];
        let e = eig_hermitian(z).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn y_projector_spectrum_and_reconstruction() {
        let [id, _, y, _] = pauli_matrices();
        let m = (&id + &y) * c(0.5, 0.0);
        let e = eig_hermitian(&m).unwrap();
        assert!(e.eigenvalues[0].abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
        assert!((e.reconstruct() - &m).norm() < 1e-9 * m.norm());
        let v = &e.eigenvectors;
        assert!((v.adjoint() * v - Matrix::identity(2, 2)).norm() < 1e-10);
    }

    #[test]
    fn rejects_non_hermitian_with_norm() {
        let m = Matrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        match eig_hermitian(&m) {
            Err(Error::NotHermitian { deviation }) => assert!((deviation - 1.0).abs() < 1e-15),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn deterministic() {
        let m = Matrix::from_row_slice(
            3,
            3,
            &[
                c(1.0, 0.0), c(0.2, 0.3), c(0.0, -0.1),
                c(0.2, -0.3), c(0.5, 0.0), c(0.4, 0.0),
                c(0.0, 0.1), c(0.4, 0.0), c(-0.2, 0.0),
            ],
        );
        let a = eig_hermitian(&m).unwrap();
        let b = eig_hermitian(&m).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        assert_eq!(a.eigenvectors, b.eigenvectors);
    }

    #[test]
    fn log_of_maximally_mixed() {
        let rho = DensityMatrix::maximally_mixed(vec![3]);
        let l = matrix_log_on_support(&rho, DEFAULT_CUTOFF);
        let expected = Matrix::identity(3, 3) * C64::from((1.0f64 / 3.0).ln());
        assert!((l - expected).norm() < 1e-13);
    }

    #[test]
    fn log_of_pure_state_is_zero() {
        let rho = DensityMatrix::from_pure(vec![2], &Vector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]))
            .unwrap();
        assert!(matrix_log_on_support(&rho, DEFAULT_CUTOFF).norm() < 1e-15);
    }

    #[test]
    fn log_of_diagonal_state() {
        let rho = DensityMatrix::new(
            vec![2],
            Matrix::from_diagonal(&Vector::from_vec(vec![c(0.75, 0.0), c(0.25, 0.0)])),
        )
        .unwrap();
        let l = matrix_log_on_support(&rho, DEFAULT_CUTOFF);
        assert!((l[(0, 0)].re - 0.75f64.ln()).abs() < 1e-14);
        assert!((l[(1, 1)].re - 0.25f64.ln()).abs() < 1e-14);
        assert!(l[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn imaginary_power_examples() {
        let rho = DensityMatrix::maximally_mixed(vec![2]);
        let u0 = imaginary_power(&rho, 0.0, DEFAULT_CUTOFF);
        assert!((u0 - Matrix::identity(2, 2)).norm() < 1e-14);
        let u1 = imaginary_power(&rho, 1.0, DEFAULT_CUTOFF);
        // (1/2)^i = exp(-i ln 2)
        let expected = C64::from_polar(1.0, -(2.0f64).ln());
        assert!((u1[(0, 0)] - expected).norm() < 1e-14);
        assert!((u1[(1, 1)] - expected).norm() < 1e-14);
        assert!(u1[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn imaginary_power_on_rank_deficient_state_is_unitary() {
        let psi = Vector::from_vec(vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0)]);
        let rho = DensityMatrix::from_pure(vec![3], &psi).unwrap();
        let u = imaginary_power(&rho, 0.37, DEFAULT_CUTOFF);
        assert!((u.adjoint() * &u - Matrix::identity(3, 3)).norm() < 1e-12);
    }

    #[test]
    fn trace_norm_examples() {
        assert!((trace_norm(&Matrix::identity(4, 4)) - 4.0).abs() < 1e-13);
        assert!((trace_norm(&pauli_matrices()[1]) - 2.0).abs() < 1e-13);
    }

    #[test]
    fn fidelity_examples() {
        let zero = DensityMatrix::from_pure(vec![2], &Vector::from_vec(vec![c(1.0, 0.0), c(0.0, 0.0)]))
            .unwrap();
        let one = DensityMatrix::from_pure(vec![2], &Vector::from_vec(vec![c(0.0, 0.0), c(1.0, 0.0)]))
            .unwrap();
        let mixed = DensityMatrix::maximally_mixed(vec![2]);
        assert!((uhlmann_fidelity(&zero, &zero).unwrap() - 1.0).abs() < 1e-10);
        assert!(uhlmann_fidelity(&zero, &one).unwrap().abs() < 1e-12);
        assert!((uhlmann_fidelity(&zero, &mixed).unwrap() - 0.5).abs() < 1e-12);
        assert!((uhlmann_fidelity(&mixed, &zero).unwrap() - 0.5).abs() < 1e-12);
        let four = DensityMatrix::maximally_mixed(vec![4]);
        assert!(matches!(
            uhlmann_fidelity(&zero, &four),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
