use serde::Serialize;

use crate::chirality::{chiral_log_distance, LogDistanceOptions};
use crate::qmat::{partial_trace, Partition};
use crate::states::{example1_purified, example1_state};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct NonmonotonicityReport {
    pub weights: [f64; 3],
    /// Pure state on A A' B with partition {A, A'} | {B}.
    pub purified_value: f64,
    pub purified_converged: bool,
    /// After tracing out A', partition {A} | {B}.
    pub reduced_value: f64,
    pub reduced_fidelity: f64,
    pub reduced_converged: bool,
    /// After tracing out A instead. A and A' enter the purification
    /// symmetrically, so this reproduces `reduced_value`.
    pub traced_a_value: f64,
}

/// Log-distance of the purified qutrit-qutrit-qubit state before and after
/// a local partial trace: the pure state is non-chiral across {A A'} | {B},
/// its reduction to A B is chiral.
pub fn nonmonotonicity_demo(p: [f64; 3], restarts: usize, seed: u64) -> Result<NonmonotonicityReport> {
    let pure = example1_purified(&p)?;
    let opts = LogDistanceOptions::with_restarts(restarts, seed);
    let whole = chiral_log_distance(&pure, &Partition::new(vec![vec![0, 1], vec![2]], 3)?, &opts)?;
    let bip = Partition::contiguous(&[1, 1]);
    let reduced_state = example1_state(&p)?;
    let via_trace = partial_trace(&pure, &[0, 2])?;
    debug_assert!((via_trace.data() - reduced_state.data()).norm() < 1e-12);
    let reduced = chiral_log_distance(&via_trace, &bip, &opts)?;
    let other = partial_trace(&pure, &[1, 2])?;
    let traced_a = chiral_log_distance(&other, &bip, &opts)?;
    let report = NonmonotonicityReport {
        weights: p,
        purified_value: whole.value,
        purified_converged: whole.detail.converged.iter().all(|&c| c),
        reduced_value: reduced.value,
        reduced_fidelity: reduced.detail.best_fidelity,
        reduced_converged: reduced.detail.converged.iter().all(|&c| c),
        traced_a_value: traced_a.value,
    };
    if !(report.purified_value < report.reduced_value) {
        return Err(Error::BoundViolation(format!(
            "log-distance did not increase under the partial trace: {report:?}"
        )));
    }
    Ok(report)
}
