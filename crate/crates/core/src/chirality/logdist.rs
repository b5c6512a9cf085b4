use rayon::prelude::*;
use serde::Serialize;

use crate::experiments::sample_haar_unitary;
use crate::qmat::{permute_vector, DensityMatrix, Matrix, Partition, Vector, C64};
use crate::qmat::{purify, Purification};
use crate::rng;
use crate::{Error, Result};

/// Fidelity above which the log-distance search certifies non-chirality.
pub const CERTIFY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct LogDistanceOptions {
    /// Total number of starts, counting the identity start and warm starts.
    pub restarts: usize,
    pub max_iters: usize,
    /// Stop once a sweep raises the fidelity by less than this.
    pub tol: f64,
    pub seed: u64,
    /// Initial unitaries, one per group with an optional trailing ancilla
    /// unitary. Tried right after the identity start.
    pub warm_starts: Vec<Vec<Matrix>>,
    /// Skip the remaining starts once a batch reaches this fidelity.
    pub stop_at: Option<f64>,
}

/// Starts evaluated together when `stop_at` is set.
pub const STOP_BATCH: usize = 8;

impl Default for LogDistanceOptions {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_iters: 1000,
            tol: 1e-12,
            seed: 0,
            warm_starts: Vec::new(),
            stop_at: None,
        }
    }
}

impl LogDistanceOptions {
    pub fn with_restarts(restarts: usize, seed: u64) -> Self {
        Self {
            restarts,
            seed,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OptimizationResult {
    pub best_fidelity: f64,
    /// One unitary per group in partition order, then the ancilla unitary.
    #[serde(skip)]
    pub unitaries: Vec<Matrix>,
    pub restarts: usize,
    pub best_restart: usize,
    pub iterations_per_restart: Vec<usize>,
    pub converged: Vec<bool>,
    pub fidelities: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LogDistance {
    /// `-log` of the best fidelity found. Local optima can only lower the
    /// fidelity, so this is an upper estimate of the true log-distance.
    pub value: f64,
    pub upper_estimate: bool,
    /// Best fidelity within [`CERTIFY_TOLERANCE`] of one.
    pub certified_nonchiral: bool,
    pub detail: OptimizationResult,
}

/// Tensor layout shared by a purification and its conjugate after the
/// groups were made contiguous: legs are the groups, then the ancilla.
struct Layout {
    shape: Vec<usize>,
    source: Vector,
    target: Vector,
}

fn layout(pur: &Purification, split: &Partition) -> Result<Layout> {
    let dims = pur.dims();
    let n_sys = pur.system_dims.len();
    let mut order: Vec<usize> = split.groups().iter().flatten().copied().collect();
    order.push(n_sys);
    let source = permute_vector(&pur.vector, &dims, &order)?;
    let target = source.map(|z| z.conj());
    let mut shape: Vec<usize> = split
        .groups()
        .iter()
        .map(|g| g.iter().map(|&k| dims[k]).product())
        .collect();
    shape.push(pur.ancilla_dim);
    Ok(Layout {
        shape,
        source,
        target,
    })
}

fn leg_sizes(shape: &[usize], k: usize) -> (usize, usize, usize) {
    let left = shape[..k].iter().product();
    let right = shape[k + 1..].iter().product();
    (left, shape[k], right)
}

/// Applies `u` to leg `k` of a row-major tensor.
fn apply_on_leg(v: &Vector, shape: &[usize], k: usize, u: &Matrix) -> Vector {
    let (left, d, right) = leg_sizes(shape, k);
    let mut out = Vector::zeros(v.len());
    for l in 0..left {
        for i in 0..d {
            for j in 0..d {
                let uij = u[(i, j)];
                if uij == C64::from(0.0) {
                    continue;
                }
                let src = (l * d + j) * right;
                let dst = (l * d + i) * right;
                for r in 0..right {
                    out[dst + r] += uij * v[src + r];
                }
            }
        }
    }
    out
}

/// `M_{ji} = sum b[l, j, r] conj(a[l, i, r])`, so `<a|U_k|b> = Tr(U M)`.
fn environment(b: &Vector, a: &Vector, shape: &[usize], k: usize) -> Matrix {
    let (left, d, right) = leg_sizes(shape, k);
    let mut m = Matrix::zeros(d, d);
    for l in 0..left {
        for j in 0..d {
            for i in 0..d {
                let mut acc = C64::from(0.0);
                let bj = (l * d + j) * right;
                let ai = (l * d + i) * right;
                for r in 0..right {
                    acc += b[bj + r] * a[ai + r].conj();
                }
                m[(j, i)] += acc;
            }
        }
    }
    m
}

/// Unitary maximizing `|Tr(U M)|`: with `M = W S V^dagger`, `U = V W^dagger`.
fn polar_step(m: &Matrix) -> Matrix {
    let svd = m.clone().svd(true, true);
    let w = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^T");
    v_t.adjoint() * w.adjoint()
}

struct RunOutcome {
    fidelity: f64,
    unitaries: Vec<Matrix>,
    iterations: usize,
    converged: bool,
}

fn run_once(lay: &Layout, init: Vec<Matrix>, max_iters: usize, tol: f64) -> RunOutcome {
    let legs = lay.shape.len();
    let mut us = init;
    let mut c = lay.source.clone();
    for (k, u) in us.iter().enumerate() {
        c = apply_on_leg(&c, &lay.shape, k, u);
    }
    let mut fid = lay.target.dotc(&c).norm_sqr();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < max_iters {
        iterations += 1;
        for k in 0..legs {
            let b = apply_on_leg(&c, &lay.shape, k, &us[k].adjoint());
            let m = environment(&b, &lay.target, &lay.shape, k);
            us[k] = polar_step(&m);
            c = apply_on_leg(&b, &lay.shape, k, &us[k]);
        }
        let next = lay.target.dotc(&c).norm_sqr();
        let gain = next - fid;
        fid = fid.max(next);
        if gain < tol {
            converged = true;
            break;
        }
    }
    RunOutcome {
        fidelity: fid,
        unitaries: us,
        iterations,
        converged,
    }
}

fn initial_unitaries(
    shape: &[usize],
    restart: usize,
    opts: &LogDistanceOptions,
) -> Result<Vec<Matrix>> {
    let legs = shape.len();
    if restart == 0 {
        return Ok(shape.iter().map(|&d| Matrix::identity(d, d)).collect());
    }
    if let Some(w) = opts.warm_starts.get(restart - 1) {
        if w.len() != legs - 1 && w.len() != legs {
            return Err(Error::Precondition(format!(
                "warm start has {} unitaries, expected {} or {legs}",
                w.len(),
                legs - 1
            )));
        }
        let mut us = w.clone();
        if us.len() == legs - 1 {
            us.push(Matrix::identity(shape[legs - 1], shape[legs - 1]));
        }
        for (u, &d) in us.iter().zip(shape) {
            if u.nrows() != d || u.ncols() != d {
                return Err(Error::DimensionMismatch(format!(
                    "warm-start unitary is {}x{}, leg has dimension {d}",
                    u.nrows(),
                    u.ncols()
                )));
            }
        }
        return Ok(us);
    }
    let mut r = rng::substream(opts.seed, restart as u64);
    Ok(shape.iter().map(|&d| sample_haar_unitary(d, &mut r)).collect())
}

/// `-log max F(rho*, U rho U^dagger)` over products of unitaries local to
/// the groups of `split`.
///
/// Works on the canonical purification `|rho>` and its conjugate, sweeping
/// the groups and then the ancilla, each time replacing that party's
/// unitary by the polar factor of its environment. Starts run in parallel;
/// the best fidelity wins with ties going to the lower start index.
pub fn chiral_log_distance(
    rho: &DensityMatrix,
    split: &Partition,
    opts: &LogDistanceOptions,
) -> Result<LogDistance> {
    if opts.restarts == 0 {
        return Err(Error::Precondition("restarts must be at least 1".into()));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Precondition(format!("tol must be positive, got {}", opts.tol)));
    }
    if split.n_subsystems() != rho.n_subsystems() {
        return Err(Error::InvalidPartition(format!(
            "partition {split} does not cover the {} subsystems",
            rho.n_subsystems()
        )));
    }
    let pur = purify(rho);
    let lay = layout(&pur, split)?;
    let total = opts.restarts.max(1 + opts.warm_starts.len());
    let batch = if opts.stop_at.is_some() { STOP_BATCH } else { total };
    let mut runs: Vec<RunOutcome> = Vec::with_capacity(total);
    let mut start = 0;
    while start < total {
        let end = (start + batch).min(total);
        let inits: Vec<Vec<Matrix>> = (start..end)
            .map(|r| initial_unitaries(&lay.shape, r, opts))
            .collect::<Result<_>>()?;
        runs.par_extend(
            inits
                .into_par_iter()
                .map(|init| run_once(&lay, init, opts.max_iters, opts.tol)),
        );
        start = end;
        if let Some(target) = opts.stop_at {
            if runs.iter().any(|r| r.fidelity >= target) {
                break;
            }
        }
    }
    let total = runs.len();
    let mut best = 0;
    for (i, r) in runs.iter().enumerate() {
        if r.fidelity > runs[best].fidelity {
            best = i;
        }
    }
    let fidelities: Vec<f64> = runs.iter().map(|r| r.fidelity).collect();
    let best_fidelity = fidelities[best];
    if runs.iter().any(|r| !r.converged) {
        log::info!(
            "log-distance: {} of {total} starts hit max_iters = {}",
            runs.iter().filter(|r| !r.converged).count(),
            opts.max_iters
        );
    }
    let detail = OptimizationResult {
        best_fidelity,
        unitaries: runs[best].unitaries.clone(),
        restarts: total,
        best_restart: best,
        iterations_per_restart: runs.iter().map(|r| r.iterations).collect(),
        converged: runs.iter().map(|r| r.converged).collect(),
        fidelities,
    };
    Ok(LogDistance {
        value: -best_fidelity.min(1.0).ln(),
        upper_estimate: true,
        certified_nonchiral: best_fidelity >= 1.0 - CERTIFY_TOLERANCE,
        detail,
    })
}

/// Overlap `|<rho*| (U_1 ⊗ ... ⊗ V) |rho>|^2` for the given unitaries, in the
/// same layout the optimizer uses.
pub fn purified_overlap(rho: &DensityMatrix, split: &Partition, unitaries: &[Matrix]) -> Result<f64> {
    let pur = purify(rho);
    let lay = layout(&pur, split)?;
    if unitaries.len() != lay.shape.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} unitaries for {} legs",
            unitaries.len(),
            lay.shape.len()
        )));
    }
    let c = unitaries
        .iter()
        .enumerate()
        .fold(lay.source.clone(), |c, (k, u)| apply_on_leg(&c, &lay.shape, k, u));
    Ok(lay.target.dotc(&c).norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_on_leg_matches_kronecker() {
        let mut r = rng::stream(1);
        let shape = [2, 3, 2];
        let u = sample_haar_unitary(3, &mut r);
        let v = Vector::from_fn(12, |i, _| C64::new(i as f64, 1.0 - i as f64));
        let full = Matrix::identity(2, 2).kronecker(&u).kronecker(&Matrix::identity(2, 2));
        assert!((apply_on_leg(&v, &shape, 1, &u) - &full * &v).norm() < 1e-12);
    }

    #[test]
    fn polar_step_maximizes_trace() {
        let mut r = rng::stream(2);
        let m = crate::experiments::ginibre(3, 3, &mut r);
        let u = polar_step(&m);
        let nuclear: f64 = m.clone().svd(false, false).singular_values.iter().sum();
        let t = (&u * &m).trace();
        assert!((t.re - nuclear).abs() < 1e-10 && t.im.abs() < 1e-10);
    }
}
