use nalgebra::Matrix3;
use serde::Serialize;

use crate::chirality::Party;
use crate::qmat::{
    commutator, embed_operator, kron_all, partial_trace, pauli_matrices,
    DensityMatrix, Matrix, Partition, C64,
};
use crate::{Error, Result};

/// Eigenvalue gap below which a marginal counts as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-8;

/// `rho = sum_i p_i |i><i| ⊗ rho_i` in the eigenbasis of one marginal.
#[derive(Debug, Clone)]
pub struct CqDecomposition {
    pub party: Party,
    /// Columns are the basis states `|i>` of the classical party.
    pub basis: Matrix,
    pub probabilities: Vec<f64>,
    /// Conditional states on the other party; `I/d` where `p_i = 0`.
    pub conditional_states: Vec<DensityMatrix>,
    dims: Vec<usize>,
    classical_group: Vec<usize>,
    quantum_group: Vec<usize>,
}

impl CqDecomposition {
    /// `sum_i p_i |i><i| ⊗ rho_i` on the original subsystem layout.
    pub fn reconstruct(&self) -> Matrix {
        let d: usize = self.dims.iter().product();
        let mut out = Matrix::zeros(d, d);
        for (i, (&p, r)) in self.probabilities.iter().zip(&self.conditional_states).enumerate() {
            let v = self.basis.column(i).into_owned();
            let proj = embed_operator(&(&v * v.adjoint()), &self.dims, &self.classical_group)
                .expect("consistent layout");
            let cond = embed_operator(r.data(), &self.dims, &self.quantum_group).expect("consistent layout");
            out += proj * cond * C64::from(p);
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum CqVerdict {
    Decomposition(CqDecomposition),
    /// `||[rho, rho_party ⊗ I]||_F` exceeds the tolerance.
    NotCommuting { commutator_norm: f64 },
    /// Commutator vanishes but the marginal spectrum has a gap below
    /// [`DEGENERACY_GAP`], so the eigenbasis is not unique.
    DegenerateMarginal { min_gap: f64 },
}

impl CqVerdict {
    pub fn decomposition(&self) -> Option<&CqDecomposition> {
        match self {
            CqVerdict::Decomposition(d) => Some(d),
            _ => None,
        }
    }
}

fn groups(split: &Partition, party: Party) -> (Vec<usize>, Vec<usize>) {
    let g = split.groups();
    match party {
        Party::A => (g[0].clone(), g[1].clone()),
        Party::B => (g[1].clone(), g[0].clone()),
    }
}

fn min_gap(eigs: &[f64]) -> f64 {
    eigs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
}

/// `||[rho, rho_party ⊗ I]||_F`.
pub fn marginal_commutator(rho: &DensityMatrix, split: &Partition, party: Party) -> Result<f64> {
    split.expect_groups(2, rho.n_subsystems())?;
    let (g, _) = groups(split, party);
    let m = partial_trace(rho, &g)?;
    let e = embed_operator(m.data(), rho.dims(), &g)?;
    Ok(commutator(rho.data(), &e).norm())
}

/// Detects a classical-quantum structure with respect to `party`.
pub fn is_classical_quantum(rho: &DensityMatrix, split: &Partition, party: Party, tol: f64) -> Result<CqVerdict> {
    let norm = marginal_commutator(rho, split, party)?;
    if norm >= tol {
        return Ok(CqVerdict::NotCommuting { commutator_norm: norm });
    }
    let (cg, qg) = groups(split, party);
    let marginal = partial_trace(rho, &cg)?;
    let eig = marginal.eigen();
    let gap = min_gap(&eig.eigenvalues);
    if gap <= DEGENERACY_GAP {
        return Ok(CqVerdict::DegenerateMarginal { min_gap: gap });
    }
    let dims = rho.dims().to_vec();
    let dq: usize = qg.iter().map(|&k| dims[k]).product();
    let qdims: Vec<usize> = qg.iter().map(|&k| dims[k]).collect();
    let mut probabilities = Vec::new();
    let mut conditional_states = Vec::new();
    for i in 0..eig.dim() {
        let v = eig.eigenvectors.column(i).into_owned();
        let proj = embed_operator(&(&v * v.adjoint()), &dims, &cg)?;
        let block = &proj * rho.data() * &proj;
        let p = block.trace().re;
        let reduced = crate::qmat::partial_trace_matrix(&block, &dims, &qg)?;
        let cond = if p > 1e-14 {
            reduced / C64::from(p)
        } else {
            Matrix::identity(dq, dq) / C64::from(dq as f64)
        };
        probabilities.push(p);
        conditional_states.push(DensityMatrix::with_tolerance(qdims.clone(), cond, 1e-8)?);
    }
    Ok(CqVerdict::Decomposition(CqDecomposition {
        party,
        basis: eig.eigenvectors.clone(),
        probabilities,
        conditional_states,
        dims,
        classical_group: cg,
        quantum_group: qg,
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    NonchiralCertified { condition: u8, reason: String },
    Undecided { reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::NonchiralCertified { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NoncommutativityReport {
    pub commutator_a: f64,
    pub commutator_b: f64,
    pub gap_a: f64,
    pub gap_b: f64,
    pub verdict: Verdict,
}

/// Certifies non-chirality from vanishing marginal commutators together with
/// (1) both marginals nondegenerate, (2) a nondegenerate qubit marginal, or
/// (3) a two-qubit state, the last checked through the Makhlin invariants
/// of `rho` and `rho*`.
pub fn noncommutativity_verdict(rho: &DensityMatrix, split: &Partition, tol: f64) -> Result<NoncommutativityReport> {
    let commutator_a = marginal_commutator(rho, split, Party::A)?;
    let commutator_b = marginal_commutator(rho, split, Party::B)?;
    let marg = |g: &[usize]| -> Result<(f64, usize)> {
        let m = partial_trace(rho, g)?;
        Ok((min_gap(&m.eigen().eigenvalues), m.dim()))
    };
    let (gap_a, dim_a) = marg(&split.groups()[0])?;
    let (gap_b, dim_b) = marg(&split.groups()[1])?;
    let nondeg_a = gap_a > DEGENERACY_GAP;
    let nondeg_b = gap_b > DEGENERACY_GAP;
    let verdict = if commutator_a >= tol || commutator_b >= tol {
        Verdict::Undecided {
            reason: format!("marginal commutators {commutator_a:.3e}, {commutator_b:.3e} exceed {tol:.1e}"),
        }
    } else if nondeg_a && nondeg_b {
        Verdict::NonchiralCertified {
            condition: 1,
            reason: "both marginals nondegenerate".into(),
        }
    } else if (nondeg_a && dim_a == 2) || (nondeg_b && dim_b == 2) {
        Verdict::NonchiralCertified {
            condition: 2,
            reason: "nondegenerate qubit marginal".into(),
        }
    } else if dim_a == 2 && dim_b == 2 {
        let two = rho.with_dims(vec![2, 2])?;
        let a = makhlin_invariants(&two)?;
        let b = makhlin_invariants(&two.conjugate())?;
        let diff = (0..3).map(|i| (a[i] - b[i]).abs()).fold(0.0, f64::max);
        if diff < 1e-10 {
            Verdict::NonchiralCertified {
                condition: 3,
                reason: format!("two-qubit state, Makhlin invariants {a:?} match under conjugation"),
            }
        } else {
            Verdict::Undecided {
                reason: format!("Makhlin invariants differ by {diff:.3e}"),
            }
        }
    } else {
        Verdict::Undecided {
            reason: "commuting marginals, but a degenerate marginal outside the two-qubit case".into(),
        }
    };
    Ok(NoncommutativityReport {
        commutator_a,
        commutator_b,
        gap_a,
        gap_b,
        verdict,
    })
}

/// Correlation matrix `beta_ij = Tr(rho sigma_i ⊗ sigma_j) / 4`, `i, j` over
/// (X, Y, Z).
pub fn correlation_matrix(rho: &DensityMatrix) -> Result<Matrix3<f64>> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!("two-qubit state required, dims {:?}", rho.dims())));
    }
    let p = pauli_matrices();
    Ok(Matrix3::from_fn(|i, j| {
        let op = kron_all(&[p[i + 1].clone(), p[j + 1].clone()]);
        (rho.data() * op).trace().re / 4.0
    }))
}

/// `(det beta, Tr(beta^T beta), Tr((beta^T beta)^2))` for a two-qubit state
/// whose marginals are both `I/2` within `1e-8`.
pub fn makhlin_invariants(rho: &DensityMatrix) -> Result<[f64; 3]> {
    if rho.dims() != [2, 2] {
        return Err(Error::DimensionMismatch(format!("two-qubit state required, dims {:?}", rho.dims())));
    }
    let half = Matrix::identity(2, 2) * C64::from(0.5);
    for k in 0..2 {
        let m = partial_trace(rho, &[k])?;
        let dev = crate::qmat::max_abs(&(m.data() - &half));
        if dev > 1e-8 {
            return Err(Error::Precondition(format!(
                "marginal {k} deviates from I/2 by {dev:.3e}; the three-invariant reduction needs maximally mixed marginals"
            )));
        }
    }
    let beta = correlation_matrix(rho)?;
    let btb = beta.transpose() * beta;
    Ok([beta.determinant(), btb.trace(), (btb * btb).trace()])
}
