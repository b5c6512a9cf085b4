//! Linear algebra over GF(2) on bit-packed rows.

use std::fmt;

/// Fixed-length bit vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Low `len` bits of `word`, bit `i` of the vector being bit `i` of the word.
    pub fn from_u64(word: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        if len > 0 {
            v.words[0] = if len == 64 { word } else { word & ((1u64 << len) - 1) };
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Low 64 bits as an integer.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// Linear system `A v = b` over GF(2); each row of `A` has `ncols` bits.
#[derive(Debug, Clone)]
pub struct F2System {
    pub rows: Vec<BitVec>,
    pub rhs: BitVec,
    pub ncols: usize,
}

impl F2System {
    pub fn new(rows: Vec<BitVec>, rhs: BitVec, ncols: usize) -> Self {
        assert_eq!(rows.len(), rhs.len(), "one right-hand-side bit per row");
        assert!(rows.iter().all(|r| r.len() == ncols), "row length mismatch");
        Self { rows, rhs, ncols }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum F2Solution {
    Solved {
        solution: BitVec,
        nullspace: Vec<BitVec>,
        rank: usize,
    },
    Infeasible {
        rank: usize,
    },
}

impl F2Solution {
    pub fn is_feasible(&self) -> bool {
        matches!(self, F2Solution::Solved { .. })
    }
}

/// Reduced row echelon form; returns the pivot column of each nonzero row.
/// `rhs` is carried along when given.
pub fn rref(rows: &mut Vec<BitVec>, mut rhs: Option<&mut BitVec>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(b) = rhs.as_deref_mut() {
            let (br, bp) = (b.get(r), b.get(p));
            b.set(r, bp);
            b.set(p, br);
        }
        let pivot_row = rows[r].clone();
        let pivot_bit = rhs.as_deref().map(|b| b.get(r));
        for i in 0..rows.len() {
            if i != r && rows[i].get(col) {
                rows[i].xor_assign(&pivot_row);
                if let (Some(b), Some(pb)) = (rhs.as_deref_mut(), pivot_bit) {
                    let v = b.get(i) ^ pb;
                    b.set(i, v);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[BitVec], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, None, ncols).len()
}

/// Gaussian elimination: one particular solution plus a nullspace basis of
/// dimension `ncols - rank`, or infeasibility.
pub fn f2_solve(system: &F2System) -> F2Solution {
    let mut rows = system.rows.clone();
    let mut rhs = system.rhs.clone();
    let n = system.ncols;
    let pivots = rref(&mut rows, Some(&mut rhs), n);
    let rank = pivots.len();
    if (rank..rows.len()).any(|i| rhs.get(i)) {
        return F2Solution::Infeasible { rank };
    }
    let mut solution = BitVec::zeros(n);
    for (i, &c) in pivots.iter().enumerate() {
        solution.set(c, rhs.get(i));
    }
    let is_pivot = {
        let mut v = vec![false; n];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let nullspace = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::zeros(n);
            v.set(f, true);
            for (i, &c) in pivots.iter().enumerate() {
                if rows[i].get(f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect();
    F2Solution::Solved {
        solution,
        nullspace,
        rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn apply(rows: &[BitVec], v: &BitVec) -> BitVec {
        BitVec::from_bools(&rows.iter().map(|r| r.dot(v)).collect::<Vec<_>>())
    }

    #[test]
    fn single_row() {
        let sys = F2System::new(
            vec![BitVec::from_bools(&[true, true])],
            BitVec::from_bools(&[true]),
            2,
        );
        match f2_solve(&sys) {
            F2Solution::Solved {
                solution,
                nullspace,
                rank,
            } => {
                assert_eq!(solution, BitVec::from_bools(&[true, false]));
                assert_eq!(nullspace, vec![BitVec::from_bools(&[true, true])]);
                assert_eq!(rank, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_matrix() {
        let sys = F2System::new(vec![BitVec::zeros(3); 2], BitVec::zeros(2), 3);
        match f2_solve(&sys) {
            F2Solution::Solved {
                solution,
                nullspace,
                rank,
            } => {
                assert!(solution.is_zero());
                assert_eq!(nullspace.len(), 3);
                assert_eq!(rank, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible() {
        let r = BitVec::from_bools(&[true, false]);
        let sys = F2System::new(vec![r.clone(), r], BitVec::from_bools(&[true, false]), 2);
        assert_eq!(f2_solve(&sys), F2Solution::Infeasible { rank: 1 });
    }

    #[test]
    fn wide_rows() {
        let n = 130;
        let mut a = BitVec::zeros(n);
        a.set(0, true);
        a.set(129, true);
        let sys = F2System::new(vec![a.clone()], BitVec::from_bools(&[true]), n);
        let F2Solution::Solved { solution, nullspace, .. } = f2_solve(&sys) else {
            panic!()
        };
        assert!(a.dot(&solution));
        assert_eq!(nullspace.len(), n - 1);
        assert!(nullspace.iter().all(|v| !a.dot(v)));
    }

    proptest! {
        // exhaustive oracle over all 2^6 vectors, 6 columns
        #[test]
        fn matches_brute_force(rows in prop::collection::vec(0u64..64, 0..6), b in 0u64..64) {
            let ncols = 6;
            let m: Vec<BitVec> = rows.iter().map(|&r| BitVec::from_u64(r, ncols)).collect();
            let rhs = BitVec::from_u64(b, m.len());
            let sys = F2System::new(m.clone(), rhs.clone(), ncols);
            let brute: Vec<u64> = (0..64u64)
                .filter(|&v| apply(&m, &BitVec::from_u64(v, ncols)) == rhs)
                .collect();
            match f2_solve(&sys) {
                F2Solution::Solved { solution, nullspace, rank } => {
                    prop_assert_eq!(apply(&m, &solution), rhs);
                    prop_assert_eq!(nullspace.len(), ncols - rank);
                    prop_assert_eq!(brute.len(), 1usize << nullspace.len());
                    for v in &nullspace {
                        prop_assert!(apply(&m, v).is_zero());
                    }
                }
                F2Solution::Infeasible { .. } => prop_assert!(brute.is_empty()),
            }
        }
    }
}
