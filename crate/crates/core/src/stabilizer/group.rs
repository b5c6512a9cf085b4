use std::fmt;

use rand::Rng;

use super::f2::{f2_solve, rank, BitVec, F2Solution, F2System};
use super::pauli::PauliString;
use crate::qmat::{DensityMatrix, Matrix, Vector, C64};
use crate::{Error, Result};

/// Independent, mutually commuting Pauli generators with signs.
///
/// `signs[i] == true` means the generator enters as `-S_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliString>,
    signs: Vec<bool>,
}

impl StabilizerGroup {
    pub fn new(n: usize, generators: Vec<PauliString>, signs: Vec<bool>) -> Result<Self> {
        if generators.len() != signs.len() {
            return Err(Error::InvalidStabilizer(format!(
                "{} generators but {} signs",
                generators.len(),
                signs.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.n_qubits() != n) {
            return Err(Error::InvalidStabilizer(format!(
                "generator {g} has {} sites, expected {n}",
                g.n_qubits()
            )));
        }
        if generators.len() > n {
            return Err(Error::InvalidStabilizer(format!(
                "{} generators exceed n = {n}",
                generators.len()
            )));
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(Error::InvalidStabilizer(format!(
                        "generators {a} and {b} anticommute"
                    )));
                }
            }
        }
        let group = Self {
            n,
            generators,
            signs,
        };
        let r = rank(&group.generator_rows(), 2 * n);
        if r != group.generators.len() {
            return Err(Error::InvalidStabilizer(format!(
                "generators are dependent (rank {r} of {})",
                group.generators.len()
            )));
        }
        Ok(group)
    }

    /// The trivial group, whose state is `I / 2^n`.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            generators: Vec::new(),
            signs: Vec::new(),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    /// Rows `[z_0 .. z_{n-1} | x_0 .. x_{n-1}]`, one per generator.
    pub fn generator_rows(&self) -> Vec<BitVec> {
        self.generators.iter().map(symplectic_row).collect()
    }

    /// Parses one generator per line: an optional sign (`+`, `-` or `\u{2212}`)
    /// followed by I/X/Y/Z. Blank lines and lines starting with `#` are skipped.
    pub fn parse_tableau(text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        let mut signs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (neg, body) = if let Some(rest) = line.strip_prefix('+') {
                (false, rest)
            } else if let Some(rest) = line.strip_prefix('-') {
                (true, rest)
            } else if let Some(rest) = line.strip_prefix('\u{2212}') {
                (true, rest)
            } else {
                (false, line)
            };
            generators.push(body.trim().parse::<PauliString>()?);
            signs.push(neg);
        }
        let n = generators.first().map(|g| g.n_qubits()).ok_or_else(|| {
            Error::InvalidStabilizer("tableau has no generators".into())
        })?;
        Self::new(n, generators, signs)
    }

    /// Random group with `k` generators: each new generator is drawn
    /// uniformly among strings that commute with, and are independent of,
    /// the ones already chosen. Signs are uniform.
    pub fn random<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Self {
        assert!(k <= n && n <= 16, "need k <= n <= 16");
        let mut gens: Vec<PauliString> = Vec::with_capacity(k);
        let mut rows: Vec<BitVec> = Vec::with_capacity(k);
        while gens.len() < k {
            let cand = PauliString::from_index(n, rng.random_range(1..1u64 << (2 * n)));
            if gens.iter().any(|g| !g.commutes_with(&cand)) {
                continue;
            }
            rows.push(symplectic_row(&cand));
            if rank(&rows, 2 * n) == rows.len() {
                gens.push(cand);
            } else {
                rows.pop();
            }
        }
        let signs = (0..k).map(|_| rng.random::<bool>()).collect();
        Self {
            n,
            generators: gens,
            signs,
        }
    }

    /// `2^{-n} prod_i (I + s_i S_i)`.
    pub fn state(&self) -> DensityMatrix {
        let d = 1usize << self.n;
        let mut m = Matrix::identity(d, d);
        for (g, &neg) in self.generators.iter().zip(&self.signs) {
            let sm = g.apply_left(&m);
            m = if neg { &m - sm } else { &m + sm };
        }
        m *= C64::from(1.0 / d as f64);
        DensityMatrix::from_parts_unchecked(vec![2; self.n], m)
    }

    /// State vector of a maximal group (`k = n`), fixed up to global phase by
    /// making its first nonzero amplitude real and positive.
    pub fn state_vector(&self) -> Result<Vector> {
        if self.len() != self.n {
            return Err(Error::Precondition(format!(
                "state vector needs n = {} generators, have {}",
                self.n,
                self.len()
            )));
        }
        let d = 1usize << self.n;
        let threshold = 0.5 / d as f64;
        for j in 0..d {
            let mut v = Vector::zeros(d);
            v[j] = C64::from(1.0);
            for (g, &neg) in self.generators.iter().zip(&self.signs) {
                let sv = g.apply(&v);
                v = if neg { (&v - sv) * C64::from(0.5) } else { (&v + sv) * C64::from(0.5) };
            }
            let norm2 = v.norm_squared();
            if norm2 > threshold {
                let lead = v.iter().find(|z| z.norm() > 1e-12).copied().unwrap();
                let phase = lead / C64::from(lead.norm());
                return Ok(v / (phase * C64::from(norm2.sqrt())));
            }
        }
        unreachable!("a stabilizer projector has a basis column of weight >= 2^-n")
    }

    /// The Pauli conjugation system and its full solution set.
    pub fn conjugation_pauli(&self) -> ConjugationSolution {
        conjugation_pauli(self)
    }
}

impl fmt::Display for StabilizerGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (g, &neg) in self.generators.iter().zip(&self.signs) {
            writeln!(f, "{}{g}", if neg { '-' } else { '+' })?;
        }
        Ok(())
    }
}

pub(crate) fn symplectic_row(p: &PauliString) -> BitVec {
    let n = p.n_qubits();
    let mut row = BitVec::zeros(2 * n);
    for q in 0..n {
        let (z, x) = p.site(q);
        row.set(q, z);
        row.set(n + q, x);
    }
    row
}

/// Pauli string `Q` with `Q rho Q^dagger = rho*`, plus every other solution.
#[derive(Debug, Clone)]
pub struct ConjugationSolution {
    pub base: PauliString,
    /// Basis of the homogeneous solutions; dimension `2n - k`.
    pub nullspace: Vec<PauliString>,
    /// Per-generator parity of the number of Y sites.
    pub rhs: Vec<bool>,
}

impl ConjugationSolution {
    pub fn count(&self) -> u128 {
        1u128 << self.nullspace.len()
    }

    /// All `2^{dim nullspace}` solutions, base first.
    pub fn all(&self) -> Vec<PauliString> {
        assert!(self.nullspace.len() <= 20, "solution set too large to list");
        (0..1u32 << self.nullspace.len())
            .map(|mask| {
                self.nullspace
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(self.base, |acc, (_, p)| acc.mul_phase_free(p))
            })
            .collect()
    }
}

/// Solves `[M_Z | M_X] (v_X ; v_Z) = b` with `b_i` the parity of Y sites in
/// generator `i`; the solution is the Pauli with x-part `v_X` and z-part `v_Z`.
pub fn conjugation_pauli(group: &StabilizerGroup) -> ConjugationSolution {
    let n = group.n;
    let rhs: Vec<bool> = group.generators.iter().map(|g| g.y_count() % 2 == 1).collect();
    let system = F2System::new(group.generator_rows(), BitVec::from_bools(&rhs), 2 * n);
    let to_pauli = |v: &BitVec| {
        (0..n).fold(PauliString::identity(n), |p, q| p.with_site(q, v.get(n + q), v.get(q)))
    };
    match f2_solve(&system) {
        F2Solution::Solved {
            solution,
            nullspace,
            ..
        } => ConjugationSolution {
            base: to_pauli(&solution),
            nullspace: nullspace.iter().map(to_pauli).collect(),
            rhs,
        },
        F2Solution::Infeasible { .. } => {
            unreachable!("independent generator rows make the conjugation system solvable")
        }
    }
}
