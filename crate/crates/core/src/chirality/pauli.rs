use rayon::prelude::*;
use serde::Serialize;

use crate::qmat::Vector;
use crate::stabilizer::{check_register, PauliString, MAX_PAULI_QUBITS};
use crate::Result;

#[derive(Debug, Clone, Copy)]
pub struct PauliLogDistance {
    pub value: f64,
    /// `max_P |<psi*|P|psi>|^2`.
    pub overlap: f64,
    pub best: PauliString,
}

#[derive(Serialize)]
struct Repr {
    value: f64,
    overlap: f64,
    best: String,
}

impl Serialize for PauliLogDistance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Repr {
            value: self.value,
            overlap: self.overlap,
            best: self.best.to_string(),
        }
        .serialize(s)
    }
}

/// `-log max_P |<psi*|P|psi>|^2` over all phase-free Pauli strings.
///
/// The `4^n` strings are scanned in parallel chunks; the maximum goes to the
/// lowest string index on ties, so the result does not depend on threading.
pub fn pauli_log_distance(psi: &Vector, n: usize) -> Result<PauliLogDistance> {
    check_register(psi, n, MAX_PAULI_QUBITS)?;
    let total = 1u64 << (2 * n);
    let (overlap, idx) = (0..total)
        .into_par_iter()
        .map(|i| (PauliString::from_index(n, i).conjugate_overlap(psi).norm_sqr(), i))
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX),
            |a, b| {
                if a.0 > b.0 || (a.0 == b.0 && a.1 < b.1) {
                    a
                } else {
                    b
                }
            },
        );
    Ok(PauliLogDistance {
        value: -overlap.min(1.0).ln(),
        overlap,
        best: PauliString::from_index(n, idx),
    })
}
