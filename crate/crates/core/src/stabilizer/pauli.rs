use std::fmt;
use std::str::FromStr;

use crate::qmat::{Matrix, Vector, C64};
use crate::{Error, Result};

/// Largest register a [`PauliString`] can describe.
pub const MAX_QUBITS: usize = 32;

/// Phase-free Pauli string on `n` qubits as a symplectic pair of bit masks.
///
/// Per site the pair (z, x) encodes (0,0)=I, (0,1)=X, (1,0)=Z, (1,1)=Y, with
/// Y = -i Z X. Qubit `q` is bit `n - 1 - q` of both masks, which matches the
/// bit of the computational-basis index it acts on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    n: usize,
    z: u64,
    x: u64,
}

impl PauliString {
    pub fn new(n: usize, z: u64, x: u64) -> Self {
        assert!(n <= MAX_QUBITS, "at most {MAX_QUBITS} qubits");
        let mask = Self::mask(n);
        assert!(z & !mask == 0 && x & !mask == 0, "bits beyond n = {n}");
        Self { n, z, x }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, 0)
    }

    fn mask(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// The `index`-th of the `4^n` strings, `index = (z << n) | x`.
    pub fn from_index(n: usize, index: u64) -> Self {
        Self::new(n, index >> n, index & Self::mask(n))
    }

    pub fn index(&self) -> u64 {
        (self.z << self.n) | self.x
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    /// (z, x) of qubit `q`.
    pub fn site(&self, q: usize) -> (bool, bool) {
        let b = self.n - 1 - q;
        ((self.z >> b) & 1 == 1, (self.x >> b) & 1 == 1)
    }

    pub fn with_site(mut self, q: usize, z: bool, x: bool) -> Self {
        let b = 1u64 << (self.n - 1 - q);
        self.z = if z { self.z | b } else { self.z & !b };
        self.x = if x { self.x | b } else { self.x & !b };
        self
    }

    pub fn y_count(&self) -> u32 {
        (self.z & self.x).count_ones()
    }

    pub fn weight(&self) -> u32 {
        (self.z | self.x).count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.z == 0 && self.x == 0
    }

    /// Symplectic product; `false` means the strings commute.
    pub fn symplectic(&self, other: &Self) -> bool {
        ((self.z & other.x) ^ (self.x & other.z)).count_ones() % 2 == 1
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !self.symplectic(other)
    }

    /// Product up to phase.
    pub fn mul_phase_free(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::new(self.n, self.z ^ other.z, self.x ^ other.x)
    }

    /// `(-i)^{#Y}`.
    fn y_phase(&self) -> C64 {
        match self.y_count() % 4 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, -1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, 1.0),
        }
    }

    /// `P|j> = phase * |j ^ x>`.
    #[inline]
    pub fn act(&self, j: usize) -> (usize, C64) {
        let target = j ^ self.x as usize;
        let sign_flips = (self.z & target as u64).count_ones() % 2;
        let mut phase = self.y_phase();
        if sign_flips == 1 {
            phase = -phase;
        }
        (target, phase)
    }

    pub fn apply(&self, psi: &Vector) -> Vector {
        debug_assert_eq!(psi.len(), 1 << self.n);
        let mut out = Vector::zeros(psi.len());
        let base = self.y_phase();
        for j in 0..psi.len() {
            let target = j ^ self.x as usize;
            let flip = (self.z & target as u64).count_ones() % 2 == 1;
            out[target] = if flip { -base * psi[j] } else { base * psi[j] };
        }
        out
    }

    /// `P M` for a matrix acting on the same register.
    pub fn apply_left(&self, m: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(m.nrows(), m.ncols());
        for j in 0..m.nrows() {
            let (t, ph) = self.act(j);
            for c in 0..m.ncols() {
                out[(t, c)] = ph * m[(j, c)];
            }
        }
        out
    }

    pub fn to_matrix(&self) -> Matrix {
        let d = 1usize << self.n;
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let (t, ph) = self.act(j);
            m[(t, j)] = ph;
        }
        m
    }

    /// `<psi|P|psi>`.
    pub fn expectation(&self, psi: &Vector) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..psi.len() {
            let (t, ph) = self.act(j);
            acc += psi[t].conj() * ph * psi[j];
        }
        acc
    }

    /// `<psi*|P|psi> = sum_t psi_t (P psi)_t`.
    pub fn conjugate_overlap(&self, psi: &Vector) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..psi.len() {
            let (t, ph) = self.act(j);
            acc += psi[t] * ph * psi[j];
        }
        acc
    }

    pub fn all(n: usize) -> impl Iterator<Item = PauliString> {
        (0..1u64 << (2 * n)).map(move |i| PauliString::from_index(n, i))
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n {
            let c = match self.site(q) {
                (false, false) => 'I',
                (false, true) => 'X',
                (true, false) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.is_empty() || chars.len() > MAX_QUBITS {
            return Err(Error::InvalidStabilizer(format!(
                "Pauli string must have 1..={MAX_QUBITS} sites: {s:?}"
            )));
        }
        let mut p = PauliString::identity(chars.len());
        for (q, ch) in chars.iter().enumerate() {
            let (z, x) = match ch.to_ascii_uppercase() {
                'I' => (false, false),
                'X' => (false, true),
                'Z' => (true, false),
                'Y' => (true, true),
                other => {
                    return Err(Error::InvalidStabilizer(format!(
                        "unexpected character {other:?} in {s:?}"
                    )))
                }
            };
            p = p.with_site(q, z, x);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::{kron_all, pauli_matrices};
    use proptest::prelude::*;

    fn dense(p: &PauliString) -> Matrix {
        let [i, x, y, z] = pauli_matrices();
        let ops: Vec<Matrix> = (0..p.n_qubits())
            .map(|q| match p.site(q) {
                (false, false) => i.clone(),
                (false, true) => x.clone(),
                (true, true) => y.clone(),
                (true, false) => z.clone(),
            })
            .collect();
        kron_all(&ops)
    }

    #[test]
    fn matrices_match_kronecker() {
        for n in 1..=3 {
            for p in PauliString::all(n) {
                assert!((p.to_matrix() - dense(&p)).norm() < 1e-14, "{p}");
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let p: PauliString = "XIYZ".parse().unwrap();
        assert_eq!(p.to_string(), "XIYZ");
        assert_eq!(p.site(0), (false, true));
        assert_eq!(p.site(2), (true, true));
        assert_eq!(p.y_count(), 1);
        assert!("XQ".parse::<PauliString>().is_err());
        assert!("".parse::<PauliString>().is_err());
    }

    #[test]
    fn commutation() {
        let x: PauliString = "X".parse().unwrap();
        let z: PauliString = "Z".parse().unwrap();
        let xx: PauliString = "XX".parse().unwrap();
        let zz: PauliString = "ZZ".parse().unwrap();
        assert!(!x.commutes_with(&z));
        assert!(xx.commutes_with(&zz));
    }

    proptest! {
        #[test]
        fn apply_matches_matrix(idx in 0u64..256, re in prop::collection::vec(-1.0f64..1.0, 16), im in prop::collection::vec(-1.0f64..1.0, 16)) {
            let p = PauliString::from_index(4, idx);
            let psi = Vector::from_iterator(16, re.iter().zip(&im).map(|(&a, &b)| C64::new(a, b)));
            let direct = p.apply(&psi);
            let via = p.to_matrix() * &psi;
            prop_assert!((direct - via).norm() < 1e-12);
            let e = p.expectation(&psi);
            let e2 = psi.dotc(&(p.to_matrix() * &psi));
            prop_assert!((e - e2).norm() < 1e-12);
        }

        #[test]
        fn commutation_matches_matrices(a in 0u64..64, b in 0u64..64) {
            let p = PauliString::from_index(3, a);
            let q = PauliString::from_index(3, b);
            let (mp, mq) = (p.to_matrix(), q.to_matrix());
            let comm = &mp * &mq - &mq * &mp;
            prop_assert_eq!(p.commutes_with(&q), comm.norm() < 1e-12);
        }
    }
}
