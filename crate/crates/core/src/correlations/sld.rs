use crate::qmat::{support_threshold, DensityMatrix, EigenDecomposition, Matrix, C64, DEFAULT_CUTOFF};
use crate::quadrature::{sech_pi, CompositeRule};
use crate::{Error, Result};

/// Minimum eigenvalue accepted by [`sld_integral_form`].
pub const INTEGRAL_MIN_EIGENVALUE: f64 = 1e-10;

/// Inverse of `R_rho(X) = (X rho + rho X) / 2`, acting entrywise in the
/// eigenbasis of `rho` as `X_jk -> 2 X_jk / (p_j + p_k)`. Entries with
/// `p_j + p_k` at or below the support threshold are set to zero.
#[derive(Debug, Clone)]
pub struct SldOperator {
    basis: EigenDecomposition,
    threshold: f64,
}

impl SldOperator {
    pub fn new(rho: &DensityMatrix) -> Self {
        Self::with_cutoff(rho, DEFAULT_CUTOFF)
    }

    pub fn with_cutoff(rho: &DensityMatrix, cutoff: f64) -> Self {
        let basis = rho.eigen();
        let threshold = support_threshold(&basis.eigenvalues, cutoff);
        Self { basis, threshold }
    }

    pub fn basis(&self) -> &EigenDecomposition {
        &self.basis
    }

    pub fn apply(&self, op: &Matrix) -> Matrix {
        let p = &self.basis.eigenvalues;
        let o = self.basis.to_eigenbasis(op);
        let scaled = Matrix::from_fn(o.nrows(), o.ncols(), |j, k| {
            let s = p[j] + p[k];
            if s > self.threshold {
                o[(j, k)] * (2.0 / s)
            } else {
                C64::from(0.0)
            }
        });
        self.basis.from_eigenbasis(&scaled)
    }

    /// `||R^{-1}(O) rho + rho R^{-1}(O) - 2 O||_F` restricted to the support.
    pub fn residual(&self, op: &Matrix) -> f64 {
        let p = &self.basis.eigenvalues;
        let x = self.basis.to_eigenbasis(&self.apply(op));
        let o = self.basis.to_eigenbasis(op);
        let mut acc = 0.0;
        for j in 0..p.len() {
            for k in 0..p.len() {
                if p[j] + p[k] > self.threshold {
                    acc += (x[(j, k)] * (p[j] + p[k]) - o[(j, k)] * 2.0).norm_sqr();
                }
            }
        }
        acc.sqrt()
    }
}

pub fn sld_apply(rho: &DensityMatrix, op: &Matrix, cutoff: f64) -> Matrix {
    SldOperator::with_cutoff(rho, cutoff).apply(op)
}

/// `int rho^{-1/2 + is} O rho^{-1/2 - is} / cosh(pi s) ds` by composite
/// Gauss-Legendre on `[-half_width, half_width]`.
pub fn sld_integral_form(rho: &DensityMatrix, op: &Matrix, half_width: f64, panels: usize) -> Result<Matrix> {
    let eig = rho.eigen();
    let min = eig.eigenvalues[0];
    if min <= INTEGRAL_MIN_EIGENVALUE {
        return Err(Error::RankDeficient { min_eigenvalue: min });
    }
    let d = eig.dim();
    let rule = CompositeRule::symmetric(half_width, panels);
    let mut acc = Matrix::zeros(d, d);
    for (&s, &w) in rule.nodes.iter().zip(&rule.weights) {
        // rho^{-1/2 + is}
        let a = eig.map(|p| (C64::new(-0.5, s) * p.ln()).exp());
        acc += (&a * op * a.adjoint()) * C64::from(w * sech_pi(s));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{ginibre, sample_mixed_state};
    use crate::rng;

    fn hermitian(m: &Matrix) -> Matrix {
        (m + m.adjoint()) * C64::from(0.5)
    }

    #[test]
    fn maximally_mixed_scales_by_dimension() {
        let rho = DensityMatrix::maximally_mixed(vec![3]);
        let mut r = rng::stream(1);
        let o = hermitian(&ginibre(3, 3, &mut r));
        let out = sld_apply(&rho, &o, DEFAULT_CUTOFF);
        assert!((out - &o * C64::from(3.0)).norm() < 1e-12);
    }

    #[test]
    fn rho_maps_to_support_projector() {
        let mut r = rng::stream(2);
        let rho = sample_mixed_state(&[2, 2], &mut r);
        let out = sld_apply(&rho, rho.data(), DEFAULT_CUTOFF);
        assert!((out - Matrix::identity(4, 4)).norm() < 1e-10);
        // rank-deficient: identity on the support only
        let pure = DensityMatrix::maximally_mixed(vec![1]);
        assert!((sld_apply(&pure, pure.data(), DEFAULT_CUTOFF)[(0, 0)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn defining_equation_and_integral_form() {
        let mut r = rng::stream(3);
        for dims in [vec![2, 2], vec![2, 3]] {
            let rho = sample_mixed_state(&dims, &mut r);
            let d = rho.dim();
            let o = hermitian(&ginibre(d, d, &mut r));
            let sld = SldOperator::new(&rho);
            assert!(sld.residual(&o) < 1e-9);
            let x = sld.apply(&o);
            let lhs = &x * rho.data() + rho.data() * &x;
            assert!((lhs - &o * C64::from(2.0)).norm() < 1e-9);
            let integral = sld_integral_form(&rho, &o, 8.0, 256).unwrap();
            assert!((integral - x).norm() < 1e-6);
        }
    }

    #[test]
    fn diagonal_and_identity_cases() {
        let rho = DensityMatrix::new(
            vec![3],
            Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
                C64::from(0.2),
                C64::from(0.3),
                C64::from(0.5),
            ])),
        )
        .unwrap();
        let o = Matrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            C64::from(1.0),
            C64::from(-2.0),
            C64::from(0.5),
        ]));
        let out = sld_integral_form(&rho, &o, 8.0, 256).unwrap();
        let expect = [1.0 / 0.2, -2.0 / 0.3, 0.5 / 0.5];
        for i in 0..3 {
            assert!((out[(i, i)].re - expect[i]).abs() < 1e-8);
        }
        let inv = sld_integral_form(&rho, &Matrix::identity(3, 3), 8.0, 256).unwrap();
        for (i, p) in [0.2, 0.3, 0.5].iter().enumerate() {
            assert!((inv[(i, i)].re - 1.0 / p).abs() < 1e-8);
        }
    }

    #[test]
    fn integral_form_rejects_rank_deficiency() {
        let rho = DensityMatrix::from_pure(vec![2], &crate::qmat::basis_vector(2, 0)).unwrap();
        assert!(matches!(
            sld_integral_form(&rho, &Matrix::identity(2, 2), 8.0, 64),
            Err(Error::RankDeficient { .. })
        ));
    }
}
