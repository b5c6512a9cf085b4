//! Exhaustive list of pure stabilizer states for small registers.

use std::collections::HashSet;
use std::sync::OnceLock;

use super::group::StabilizerGroup;
use super::pauli::PauliString;
use crate::qmat::Vector;
use crate::{Error, Result};

/// Largest register for which the pure stabilizer states are enumerated.
pub const MAX_ENUMERATION_QUBITS: usize = 4;

static CACHE: [OnceLock<Vec<Vector>>; MAX_ENUMERATION_QUBITS + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_QUBITS + 1];

/// All pure `n`-qubit stabilizer states, each normalized with its first
/// nonzero amplitude real and positive. Counts are 6, 60, 1080, 36720 for
/// n = 1..4. Built once per `n` and cached.
pub fn stabilizer_states(n: usize) -> Result<&'static [Vector]> {
    if n == 0 || n > MAX_ENUMERATION_QUBITS {
        return Err(Error::Unsupported(format!(
            "stabilizer-state enumeration covers 1..={MAX_ENUMERATION_QUBITS} qubits, got {n}; \
             use stabilizer_nullity or pauli_log_distance for larger registers"
        )));
    }
    Ok(CACHE[n].get_or_init(|| build(n)))
}

/// Maximal commuting generator sets in canonical form: reduced row-echelon
/// `n x 2n` matrices of full rank whose rows are pairwise symplectically
/// orthogonal. Columns are `[z_0..z_{n-1} | x_0..x_{n-1}]`, column `c` being
/// bit `c` of each row word.
pub fn lagrangian_tableaux(n: usize) -> Vec<Vec<PauliString>> {
    assert!(2 * n <= 32);
    let ncols = 2 * n;
    let mut out = Vec::new();
    for pivots in combinations(ncols, n) {
        let is_pivot = |c: usize| pivots.contains(&c);
        // free positions per row: non-pivot columns to the right of its pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..ncols).filter(|&c| !is_pivot(c)).map(move |c| (r, c)))
            .collect();
        for assignment in 0u64..1u64 << free.len() {
            let mut rows: Vec<u32> = pivots.iter().map(|&p| 1u32 << p).collect();
            for (bit, &(r, c)) in free.iter().enumerate() {
                if assignment >> bit & 1 == 1 {
                    rows[r] |= 1 << c;
                }
            }
            let paulis: Vec<PauliString> = rows.iter().map(|&w| row_to_pauli(n, w)).collect();
            let isotropic = paulis
                .iter()
                .enumerate()
                .all(|(i, a)| paulis[i + 1..].iter().all(|b| a.commutes_with(b)));
            if isotropic {
                out.push(paulis);
            }
        }
    }
    out
}

fn row_to_pauli(n: usize, w: u32) -> PauliString {
    (0..n).fold(PauliString::identity(n), |p, q| {
        p.with_site(q, w >> q & 1 == 1, w >> (n + q) & 1 == 1)
    })
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn fingerprint(v: &Vector) -> Vec<i64> {
    v.iter()
        .flat_map(|z| [(z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64])
        .collect()
}

fn build(n: usize) -> Vec<Vector> {
    let mut seen = HashSet::new();
    let mut states = Vec::new();
    for gens in lagrangian_tableaux(n) {
        for signs in 0u32..1 << n {
            let signs: Vec<bool> = (0..n).map(|i| signs >> i & 1 == 1).collect();
            let group = StabilizerGroup::new(n, gens.clone(), signs).expect("canonical tableau");
            let v = group.state_vector().expect("maximal group");
            if seen.insert(fingerprint(&v)) {
                states.push(v);
            }
        }
    }
    log::debug!("enumerated {} stabilizer states on {n} qubits", states.len());
    states
}
