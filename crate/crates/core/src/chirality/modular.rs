use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::qmat::{
    commutator, embed_operator, matrix_log_on_support, partial_trace, support_threshold,
    DensityMatrix, EigenDecomposition, Matrix, Partition, C64, DEFAULT_CUTOFF,
};
use crate::quadrature::{sech_pi, CompositeRule};
use crate::{Error, Result};

/// Imaginary residue above which a trace functional is logged as suspect.
pub const RESIDUE_WARNING: f64 = 1e-8;

pub const DEFAULT_HALF_WIDTH: f64 = 8.0;
pub const DEFAULT_PANELS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    A,
    B,
}

impl Party {
    pub fn other(self) -> Self {
        match self {
            Party::A => Party::B,
            Party::B => Party::A,
        }
    }

    fn index(self) -> usize {
        match self {
            Party::A => 0,
            Party::B => 1,
        }
    }
}

impl std::str::FromStr for Party {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Party::A),
            "B" | "b" => Ok(Party::B),
            other => Err(Error::InvalidPartition(format!("party must be A or B, got {other:?}"))),
        }
    }
}

/// Real value of `i Tr(...)` with the imaginary part it discarded.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Measured {
    pub value: f64,
    pub imag_residue: f64,
}

impl Measured {
    pub(crate) fn from_trace(name: &str, i_trace: C64) -> Self {
        let residue = i_trace.im.abs();
        if residue > RESIDUE_WARNING {
            log::warn!("{name}: imaginary residue {residue:.3e}");
        }
        Self {
            value: i_trace.re,
            imag_residue: residue,
        }
    }
}

/// Result of the sech-weighted modular-flow integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaIntegral {
    pub value: f64,
    /// Bound on the contribution of `|s| > half_width`.
    pub truncation_bound: f64,
    pub half_width: f64,
    pub panels: usize,
}

/// Modular Hamiltonians `K_AB`, `K_A ⊗ I`, `I ⊗ K_B` of a bipartite state,
/// all on the full space, with the eigenbasis data of `rho_AB` the
/// functionals are evaluated in.
#[derive(Debug, Clone)]
pub struct ModularSet {
    rho: DensityMatrix,
    split: Partition,
    cutoff: f64,
    eig: EigenDecomposition,
    k_ab: Matrix,
    k_a: Matrix,
    k_b: Matrix,
    /// Eigenvalues of `rho_AB`, ascending.
    p: Vec<f64>,
    /// `log p` on the support, 0 on the kernel.
    log_p: Vec<f64>,
    ka_e: Matrix,
    kb_e: Matrix,
}

impl ModularSet {
    pub fn new(rho: &DensityMatrix, split: &Partition) -> Result<Self> {
        Self::with_cutoff(rho, split, DEFAULT_CUTOFF)
    }

    pub fn with_cutoff(rho: &DensityMatrix, split: &Partition, cutoff: f64) -> Result<Self> {
        split.expect_groups(2, rho.n_subsystems())?;
        let dims = rho.dims();
        let eig = rho.eigen();
        let thr = support_threshold(&eig.eigenvalues, cutoff);
        let log_p: Vec<f64> = eig
            .eigenvalues
            .iter()
            .map(|&p| if p > thr { p.ln() } else { 0.0 })
            .collect();
        let k_ab = eig.map(|p| if p > thr { C64::from(-p.ln()) } else { C64::from(0.0) });
        let marginal = |group: &[usize]| -> Result<Matrix> {
            let r = partial_trace(rho, group)?;
            let k = -matrix_log_on_support(&r, cutoff);
            embed_operator(&k, dims, group)
        };
        let k_a = marginal(&split.groups()[0])?;
        let k_b = marginal(&split.groups()[1])?;
        let ka_e = eig.to_eigenbasis(&k_a);
        let kb_e = eig.to_eigenbasis(&k_b);
        Ok(Self {
            rho: rho.clone(),
            split: split.clone(),
            cutoff,
            p: eig.eigenvalues.clone(),
            eig,
            k_ab,
            k_a,
            k_b,
            log_p,
            ka_e,
            kb_e,
        })
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn split(&self) -> &Partition {
        &self.split
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    pub fn k_ab(&self) -> &Matrix {
        &self.k_ab
    }

    pub fn k_a(&self) -> &Matrix {
        &self.k_a
    }

    pub fn k_b(&self) -> &Matrix {
        &self.k_b
    }

    pub fn k(&self, party: Party) -> &Matrix {
        match party {
            Party::A => &self.k_a,
            Party::B => &self.k_b,
        }
    }

    /// `||[K_A ⊗ I, I ⊗ K_B]||_F`, zero up to rounding.
    pub fn marginal_commutator_norm(&self) -> f64 {
        commutator(&self.k_a, &self.k_b).norm()
    }

    /// True when every eigenvalue of `rho_AB` lies above the support cutoff.
    pub fn is_full_rank(&self) -> bool {
        let thr = support_threshold(&self.p, self.cutoff);
        self.p.iter().all(|&x| x > thr)
    }

    fn k_e(&self, party: Party) -> &Matrix {
        match party {
            Party::A => &self.ka_e,
            Party::B => &self.kb_e,
        }
    }

    fn omega(&self, j: usize, k: usize) -> f64 {
        self.log_p[k] - self.log_p[j]
    }

    /// `[K_AB, X]` for `X` given in the eigenbasis.
    fn h_commutator(&self, x: &Matrix) -> Matrix {
        Matrix::from_fn(x.nrows(), x.ncols(), |j, k| x[(j, k)] * self.omega(j, k))
    }

    fn sum_diff(&self, x: &Matrix, y: &Matrix) -> C64 {
        // Tr(rho [X, Y]) = sum_jk (p_j - p_k) X_jk Y_kj
        self.weighted_sum(x, y, |pj, pk| pj - pk)
    }

    fn sum_plus(&self, x: &Matrix, y: &Matrix) -> C64 {
        // Tr(rho {X, Y}) = sum_jk (p_j + p_k) X_jk Y_kj
        self.weighted_sum(x, y, |pj, pk| pj + pk)
    }

    fn weighted_sum(&self, x: &Matrix, y: &Matrix, w: impl Fn(f64, f64) -> f64) -> C64 {
        let d = self.p.len();
        let mut acc = C64::from(0.0);
        for j in 0..d {
            for k in 0..d {
                acc += x[(j, k)] * y[(k, j)] * w(self.p[j], self.p[k]);
            }
        }
        acc
    }

    /// `J2 = i Tr(rho {[K_AB, K_A], K_B})`.
    pub fn j2(&self) -> Measured {
        let c = self.h_commutator(&self.ka_e);
        Measured::from_trace("J2", C64::i() * self.sum_plus(&c, &self.kb_e))
    }

    /// `J3 = i Tr(rho [[K_AB, [K_AB, K_A]], K_B])`.
    pub fn j3(&self) -> Measured {
        let c = self.h_commutator(&self.h_commutator(&self.ka_e));
        Measured::from_trace("J3", C64::i() * self.sum_diff(&c, &self.kb_e))
    }

    /// `J3' = i Tr(rho [[[K_AB, K_B], K_B], K_B])`.
    pub fn j3_prime(&self) -> Measured {
        let kb = &self.kb_e;
        let c1 = self.h_commutator(kb);
        let c2 = commutator(&c1, kb);
        let c3 = commutator(&c2, kb);
        let tr: C64 = (0..self.p.len()).map(|j| c3[(j, j)] * self.p[j]).sum();
        Measured::from_trace("J3'", C64::i() * tr)
    }

    /// `K_P(s) = rho^{-is} K_P rho^{is}` split into
    /// `K+ = (K_P(s) + K_P(-s)) / 2` and `K- = i (K_P(s) - K_P(-s)) / 2`,
    /// returned in the computational basis. `K+` is Hermitian and `K-`
    /// anti-Hermitian. For small `s`,
    /// `K- = -s [K_AB, K_P] + O(s^3)`.
    pub fn flowed_k(&self, party: Party, s: f64) -> (Matrix, Matrix) {
        let k = self.k_e(party);
        let d = self.p.len();
        let plus = Matrix::from_fn(d, d, |j, l| k[(j, l)] * (s * self.omega(j, l)).cos());
        let minus = Matrix::from_fn(d, d, |j, l| -k[(j, l)] * (s * self.omega(j, l)).sin());
        (self.eig.from_eigenbasis(&plus), self.eig.from_eigenbasis(&minus))
    }

    /// `gamma_s = i Tr(rho [K_A^+(s), K_B])`.
    pub fn gamma_s(&self, s: f64) -> Measured {
        Measured::from_trace("gamma_s", self.gamma_s_raw(s))
    }

    /// `phi_s = i Tr(rho {K_A^-(s), K_B})`.
    pub fn phi_s(&self, s: f64) -> Measured {
        let d = self.p.len();
        let mut acc = C64::from(0.0);
        for j in 0..d {
            for k in 0..d {
                let w = (self.p[j] + self.p[k]) * -(s * self.omega(j, k)).sin();
                acc += self.ka_e[(j, k)] * self.kb_e[(k, j)] * w;
            }
        }
        Measured::from_trace("phi_s", C64::i() * acc)
    }

    fn gamma_s_raw(&self, s: f64) -> C64 {
        let d = self.p.len();
        let mut acc = C64::from(0.0);
        for j in 0..d {
            for k in 0..d {
                let w = (self.p[j] - self.p[k]) * (s * self.omega(j, k)).cos();
                acc += self.ka_e[(j, k)] * self.kb_e[(k, j)] * w;
            }
        }
        C64::i() * acc
    }

    /// `sup_s |gamma_s| <= sum_jk |p_j - p_k| |(K_A)_jk (K_B)_kj|`.
    fn gamma_s_envelope(&self) -> f64 {
        let d = self.p.len();
        let mut acc = 0.0;
        for j in 0..d {
            for k in 0..d {
                acc += (self.p[j] - self.p[k]).abs() * (self.ka_e[(j, k)] * self.kb_e[(k, j)]).norm();
            }
        }
        acc
    }

    /// `gamma = int gamma_s / cosh(pi s) ds` by composite Gauss-Legendre on
    /// `[-half_width, half_width]`. Requires a full-rank state.
    pub fn gamma_integral(&self, half_width: f64, panels: usize) -> Result<GammaIntegral> {
        if half_width < 6.0 || panels < 64 {
            return Err(Error::Precondition(format!(
                "need half_width >= 6 and panels >= 64, got {half_width} and {panels}"
            )));
        }
        if !self.is_full_rank() {
            return Err(Error::RankDeficient {
                min_eigenvalue: self.p[0],
            });
        }
        let rule = CompositeRule::symmetric(half_width, panels);
        let mut residue: f64 = 0.0;
        let value = rule.integrate(|s| {
            let g = self.gamma_s_raw(s);
            residue = residue.max(g.im.abs());
            g.re * sech_pi(s)
        });
        if residue > RESIDUE_WARNING {
            log::warn!("gamma: imaginary residue {residue:.3e}");
        }
        // each tail: int_S^inf sech(pi s) ds <= 2 e^{-pi S} / pi
        let truncation_bound = self.gamma_s_envelope() * 4.0 * (-PI * half_width).exp() / PI;
        Ok(GammaIntegral {
            value,
            truncation_bound,
            half_width,
            panels,
        })
    }

    pub fn gamma(&self) -> Result<GammaIntegral> {
        self.gamma_integral(DEFAULT_HALF_WIDTH, DEFAULT_PANELS)
    }

    /// Index of `party` in the partition.
    pub fn group(&self, party: Party) -> &[usize] {
        &self.split.groups()[party.index()]
    }
}

/// `J(A, B, C) = i Tr(rho [K_AB, K_BC])` for a three-group partition.
pub fn modular_commutator(rho: &DensityMatrix, split: &Partition) -> Result<Measured> {
    modular_commutator_with_cutoff(rho, split, DEFAULT_CUTOFF)
}

pub fn modular_commutator_with_cutoff(
    rho: &DensityMatrix,
    split: &Partition,
    cutoff: f64,
) -> Result<Measured> {
    split.expect_groups(3, rho.n_subsystems())?;
    let g = split.groups();
    let k = |x: &[usize], y: &[usize]| -> Result<Matrix> {
        let mut s: Vec<usize> = x.iter().chain(y).copied().collect();
        s.sort_unstable();
        let r = partial_trace(rho, &s)?;
        embed_operator(&-matrix_log_on_support(&r, cutoff), rho.dims(), &s)
    };
    let k_ab = k(&g[0], &g[1])?;
    let k_bc = k(&g[1], &g[2])?;
    let tr = (rho.data() * commutator(&k_ab, &k_bc)).trace();
    Ok(Measured::from_trace("modular commutator", C64::i() * tr))
}
