use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::qmat::{DensityMatrix, Matrix, Vector, C64};

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// `diag(R)` moved into `Q`.
pub fn sample_haar_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix {
    let g = ginibre(d, d, rng);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let rjj = r[(j, j)];
        let n = rjj.norm();
        let phase = if n > 0.0 { rjj / C64::from(n) } else { C64::from(1.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Matrix with i.i.d. complex standard normal entries, `E|z|^2 = 1`.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix::from_fn(rows, cols, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        C64::new(re * s, im * s)
    })
}

/// Uniform point on the probability simplex (flat Dirichlet) via normalized
/// standard exponentials.
pub fn sample_simplex<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..d).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}

/// `U diag(p) U^dagger` with `U` Haar and `p` flat on the simplex.
pub fn sample_mixed_state<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> DensityMatrix {
    let d: usize = dims.iter().product();
    let u = sample_haar_unitary(d, rng);
    let p = sample_simplex(d, rng);
    mixed_state_from(dims, &u, &p)
}

pub(crate) fn mixed_state_from(dims: &[usize], u: &Matrix, p: &[f64]) -> DensityMatrix {
    let diag = Matrix::from_diagonal(&Vector::from_iterator(
        p.len(),
        p.iter().map(|&x| C64::from(x)),
    ));
    let mut data = u * diag * u.adjoint();
    // restore exact Hermiticity lost to rounding
    data = (&data + data.adjoint()) * C64::from(0.5);
    DensityMatrix::from_parts_unchecked(dims.to_vec(), data)
}

/// Haar-random pure state vector.
pub fn sample_pure_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vector {
    let g = ginibre(d, 1, rng);
    let v = Vector::from_iterator(d, g.iter().cloned());
    let n = v.norm();
    v / C64::from(n)
}

/// Random product of local unitaries for the given subsystem dims.
pub fn sample_local_unitary<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> Matrix {
    dims.iter().fold(Matrix::identity(1, 1), |acc, &d| {
        acc.kronecker(&sample_haar_unitary(d, rng))
    })
}
