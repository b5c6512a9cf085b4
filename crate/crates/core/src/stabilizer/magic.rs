//! Magic monotones of pure qubit states and their relation to chirality.

use serde::Serialize;

use super::enumerate::stabilizer_states;
use super::pauli::PauliString;
use crate::chirality::{chiral_log_distance, pauli_log_distance, LogDistanceOptions};
use crate::qmat::{pauli_matrices, DensityMatrix, Matrix, Partition, Vector};
use crate::{Error, Result};

/// Largest register for the `4^n` Pauli enumerations.
pub const MAX_PAULI_QUBITS: usize = 7;

pub const DEFAULT_NULLITY_TOL: f64 = 1e-8;

/// Slack used by [`verify_magic_bounds`].
pub const MAGIC_EPSILON: f64 = 1e-7;

pub(crate) fn check_register(psi: &Vector, n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::Unsupported(format!(
            "register of {n} qubits outside 1..={max}"
        )));
    }
    if psi.len() != 1 << n {
        return Err(Error::DimensionMismatch(format!(
            "state has {} amplitudes, {n} qubits need {}",
            psi.len(),
            1usize << n
        )));
    }
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidState(format!("state norm {norm} is not 1")));
    }
    Ok(())
}

/// `n - log2 |{P : |<psi|P|psi>| > 1 - tol}|`.
pub fn stabilizer_nullity(psi: &Vector, n: usize, tol: f64) -> Result<usize> {
    check_register(psi, n, MAX_PAULI_QUBITS)?;
    let count = PauliString::all(n)
        .filter(|p| p.expectation(psi).norm() > 1.0 - tol)
        .count();
    if !count.is_power_of_two() {
        return Err(Error::Tolerance(format!(
            "{count} Pauli strings have definite expectation at tol {tol}; not a power of two"
        )));
    }
    Ok(n - count.trailing_zeros() as usize)
}

/// `max_phi |<phi|psi>|^2` over pure stabilizer states.
pub fn stabilizer_fidelity(psi: &Vector, n: usize) -> Result<f64> {
    check_register(psi, n, super::enumerate::MAX_ENUMERATION_QUBITS)?;
    let states = stabilizer_states(n)?;
    Ok(states
        .iter()
        .map(|phi| phi.dotc(psi).norm_sqr())
        .fold(0.0, f64::max))
}

/// Local unitaries realizing a Pauli string site by site.
pub fn pauli_site_unitaries(p: &PauliString) -> Vec<Matrix> {
    let [i, x, y, z] = pauli_matrices();
    (0..p.n_qubits())
        .map(|q| match p.site(q) {
            (false, false) => i.clone(),
            (false, true) => x.clone(),
            (true, true) => y.clone(),
            (true, false) => z.clone(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct MagicReport {
    pub n_qubits: usize,
    /// Chiral log-distance over single-qubit parties (an upper estimate).
    pub chiral_log_distance: f64,
    pub pauli_log_distance: f64,
    pub best_pauli: String,
    pub nullity: usize,
    pub stabilizer_fidelity: f64,
    pub minus_two_log_fidelity: f64,
    pub epsilon: f64,
    pub is_stabilizer: bool,
    pub optimizer_converged: bool,
}

impl MagicReport {
    /// Failed inequalities, empty when all hold.
    pub fn violations(&self) -> Vec<String> {
        let e = self.epsilon;
        let mut v = Vec::new();
        if self.chiral_log_distance > self.pauli_log_distance + e {
            v.push(format!(
                "C = {} > C_P + eps = {}",
                self.chiral_log_distance,
                self.pauli_log_distance + e
            ));
        }
        if self.pauli_log_distance > self.nullity as f64 + e {
            v.push(format!("C_P = {} > nu + eps = {}", self.pauli_log_distance, self.nullity as f64 + e));
        }
        if self.pauli_log_distance > self.minus_two_log_fidelity + e {
            v.push(format!(
                "C_P = {} > -2 log F + eps = {}",
                self.pauli_log_distance,
                self.minus_two_log_fidelity + e
            ));
        }
        if self.is_stabilizer {
            let all = [
                self.chiral_log_distance,
                self.pauli_log_distance,
                self.nullity as f64,
                self.minus_two_log_fidelity,
            ];
            if all.iter().any(|x| x.abs() > e) {
                v.push(format!("stabilizer input with nonzero monotones {all:?}"));
            }
        }
        v
    }
}

/// Computes `C`, `C_P`, nullity and `-2 log F` and checks
/// `C <= C_P <= nu` and `C_P <= -2 log F` up to [`MAGIC_EPSILON`].
///
/// The log-distance search gets one warm start at the best Pauli string, so
/// its estimate never exceeds `C_P`.
pub fn verify_magic_bounds(psi: &Vector, n: usize, restarts: usize, seed: u64) -> Result<MagicReport> {
    check_register(psi, n, super::enumerate::MAX_ENUMERATION_QUBITS)?;
    let rho = DensityMatrix::from_pure(vec![2; n], psi)?;
    let cp = pauli_log_distance(psi, n)?;
    let opts = LogDistanceOptions {
        restarts,
        seed,
        warm_starts: vec![pauli_site_unitaries(&cp.best)],
        ..LogDistanceOptions::default()
    };
    let ld = chiral_log_distance(&rho, &Partition::singletons(n), &opts)?;
    let nullity = stabilizer_nullity(psi, n, DEFAULT_NULLITY_TOL)?;
    let fid = stabilizer_fidelity(psi, n)?;
    let report = MagicReport {
        n_qubits: n,
        chiral_log_distance: ld.value,
        pauli_log_distance: cp.value,
        best_pauli: cp.best.to_string(),
        nullity,
        stabilizer_fidelity: fid,
        minus_two_log_fidelity: -2.0 * fid.min(1.0).ln(),
        epsilon: MAGIC_EPSILON,
        is_stabilizer: fid > 1.0 - 1e-9,
        optimizer_converged: ld.detail.converged.iter().all(|&c| c),
    };
    let violations = report.violations();
    if !violations.is_empty() {
        return Err(Error::BoundViolation(format!(
            "{}; report: {report:?}; state: {:?}",
            violations.join("; "),
            psi.as_slice()
        )));
    }
    Ok(report)
}
