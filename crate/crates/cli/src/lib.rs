//! Command dispatch for the `chiralkit` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use chiralkit::acceptance;
use chiralkit::chirality::{chiral_log_distance, measure_report, LogDistanceOptions, Party, CERTIFY_TOLERANCE};
use chiralkit::correlations::{
    gamma_qfi_report, intrinsic_ip, is_classical_quantum, noncommutativity_verdict, CqVerdict, BOUND_SLACK,
};
use chiralkit::experiments::{run_chirality_entanglement_scan, sample_mixed_state, sample_pure_vector};
use chiralkit::qmat::{frobenius_norm, DensityMatrix, Partition, DEFAULT_CUTOFF, STATE_TOLERANCE};
use chiralkit::rng::{derive_seed, substream};
use chiralkit::stabilizer::{
    stabilizer_fidelity, stabilizer_nullity, verify_magic_bounds, StabilizerGroup, DEFAULT_NULLITY_TOL,
    MAGIC_EPSILON, MAX_ENUMERATION_QUBITS,
};
use chiralkit::statefile::{parse_state_file_with_tolerance, StateFileError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_SHAPE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
pub const EXIT_USAGE: i32 = 64;

pub const THREADS_ENV: &str = "CHIRALKIT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "chiralkit", version, about = "Chirality and magic measures for density matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Nested-commutator measures J2, J3, J3', gamma_s, phi_s and gamma.
    Measure {
        #[command(flatten)]
        input: StateArgs,
        /// Flow parameter; repeat for several values.
        #[arg(long = "s", default_values_t = [0.7], allow_negative_numbers = true)]
        s: Vec<f64>,
    },
    /// Chiral log-distance by alternating local-unitary optimization.
    Logdist {
        #[command(flatten)]
        input: StateArgs,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        max_iters: usize,
        /// Stop a start once a sweep gains less fidelity than this.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Stabilizer state of a tableau: conjugation Pauli, and nullity and
    /// stabilizer fidelity for pure inputs.
    Stabilizer {
        /// Tableau file, one signed Pauli string per line.
        #[arg(long)]
        tableau: PathBuf,
    },
    /// Intrinsic interferometric power of both parties and a CQ verdict.
    Qfi {
        #[command(flatten)]
        input: StateArgs,
        #[arg(long, value_enum, default_value_t = PartyArg::A)]
        party: PartyArg,
        /// Commutator tolerance for the classical-quantum test.
        #[arg(long, default_value_t = 1e-9)]
        cq_tol: f64,
    },
    /// Magic-bound and gamma-QFI bound suites on random states.
    Bounds {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        restarts: usize,
    },
    /// Random two-qubit scan of |J2| against log-negativity.
    Scan {
        #[arg(long, default_value_t = 5000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output path; the summary goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the numbered acceptance checks.
    Selftest {
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Args, Debug)]
struct StateArgs {
    /// JSON state file.
    #[arg(long)]
    state: PathBuf,
    /// Partition such as "0|1" or "0,2|1".
    #[arg(long, default_value = "0|1")]
    split: String,
    /// Tolerance for the density-matrix checks on the input.
    #[arg(long, default_value_t = STATE_TOLERANCE)]
    state_tol: f64,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum PartyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl From<PartyArg> for Party {
    fn from(p: PartyArg) -> Self {
        match p {
            PartyArg::A => Party::A,
            PartyArg::B => Party::B,
        }
    }
}

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<StateFileError> for Failure {
    fn from(e: StateFileError) -> Self {
        Failure {
            code: e.exit_code(),
            message: e.to_string(),
        }
    }
}

impl From<chiralkit::Error> for Failure {
    fn from(e: chiralkit::Error) -> Self {
        use chiralkit::Error as E;
        let code = match &e {
            E::InvalidPartition(_) | E::Precondition(_) | E::Unsupported(_) => EXIT_USAGE,
            E::DimensionMismatch(_) => EXIT_SHAPE,
            E::InvalidState(_) | E::NotHermitian { .. } | E::RankDeficient { .. } => EXIT_INVARIANT,
            E::InvalidStabilizer(_) => EXIT_MALFORMED,
            E::Tolerance(_) | E::BoundViolation(_) => EXIT_FAILED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `argv` (program name first), runs the command and returns the
/// exit code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    if let Err(f) = configure_threads() {
        let _ = writeln!(err, "error: {}", f.message);
        return f.code;
    }
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| Failure {
        code: EXIT_USAGE,
        message: format!("{THREADS_ENV} must be a positive integer, got {raw:?}"),
    })?;
    // a second call in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Measure { input, s } => measure(&input, &s, out),
        Command::Logdist {
            input,
            restarts,
            seed,
            max_iters,
            tol,
        } => logdist(&input, restarts, seed, max_iters, tol, out),
        Command::Stabilizer { tableau } => stabilizer(&tableau, out),
        Command::Qfi { input, party, cq_tol } => qfi(&input, party.into(), cq_tol, out),
        Command::Bounds { n, seed, restarts } => bounds(n, seed, restarts, out),
        Command::Scan { n, seed, out: path } => scan(n, seed, path.as_deref(), out),
        Command::Selftest { criteria } => selftest(&criteria, out, err),
    }
}

fn emit(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("plain data");
    writeln!(out, "{text}").map_err(|e| Failure {
        code: EXIT_FAILED,
        message: format!("cannot write output: {e}"),
    })
}

fn load(input: &StateArgs) -> Result<(DensityMatrix, Partition), Failure> {
    let rho = parse_state_file_with_tolerance(&input.state, input.state_tol)?;
    let split = Partition::parse(&input.split, rho.n_subsystems())?;
    Ok((rho, split))
}

fn state_info(input: &StateArgs, rho: &DensityMatrix) -> Value {
    json!({
        "path": input.state.display().to_string(),
        "dims": rho.dims(),
        "split": input.split,
        "state_tol": input.state_tol,
    })
}

fn measure(input: &StateArgs, s: &[f64], out: &mut dyn Write) -> CmdResult {
    let (rho, split) = load(input)?;
    if split.len() != 2 {
        return Err(chiralkit::Error::InvalidPartition("measure needs two groups".into()).into());
    }
    let report = measure_report(&rho, &split, s)?;
    emit(
        out,
        &json!({
            "command": "measure",
            "state": state_info(input, &rho),
            "values": report.entries,
            "tolerances": report.tolerances,
            "notes": report.notes,
        }),
    )?;
    Ok(EXIT_OK)
}

fn logdist(input: &StateArgs, restarts: usize, seed: u64, max_iters: usize, tol: f64, out: &mut dyn Write) -> CmdResult {
    let (rho, split) = load(input)?;
    let opts = LogDistanceOptions {
        restarts,
        seed,
        max_iters,
        tol,
        ..LogDistanceOptions::default()
    };
    let ld = chiral_log_distance(&rho, &split, &opts)?;
    let d = &ld.detail;
    emit(
        out,
        &json!({
            "command": "logdist",
            "state": state_info(input, &rho),
            "value": ld.value,
            "upper_estimate": ld.upper_estimate,
            "best_fidelity": d.best_fidelity,
            "certified_nonchiral": ld.certified_nonchiral,
            "best_restart": d.best_restart,
            "restarts": d.restarts,
            "seed": seed,
            "converged": d.converged.iter().filter(|&&c| c).count(),
            "iterations_per_restart": d.iterations_per_restart,
            "fidelities": d.fidelities,
            "tolerances": {
                "sweep_gain": tol,
                "max_iters": max_iters,
                "certify": CERTIFY_TOLERANCE,
            },
        }),
    )?;
    Ok(EXIT_OK)
}

/// SHA-256 over the entries rounded to 12 decimals.
fn fingerprint(rho: &DensityMatrix) -> String {
    let mut h = Sha256::new();
    for z in rho.data().iter() {
        let re = (z.re * 1e12).round() as i64;
        let im = (z.im * 1e12).round() as i64;
        h.update(re.to_le_bytes());
        h.update(im.to_le_bytes());
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn stabilizer(path: &Path, out: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_MALFORMED,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    let group = StabilizerGroup::parse_tableau(&text)?;
    let n = group.n_qubits();
    let rho = group.state();
    let sol = group.conjugation_pauli();
    let q = sol.base.to_matrix();
    let residual = frobenius_norm(&(&q * rho.data() * q.adjoint() - rho.conjugate().data()));
    let magic = if group.len() == n && n <= MAX_ENUMERATION_QUBITS {
        let psi = group.state_vector()?;
        json!({
            "nullity": stabilizer_nullity(&psi, n, DEFAULT_NULLITY_TOL)?,
            "stabilizer_fidelity": stabilizer_fidelity(&psi, n)?,
            "nullity_tol": DEFAULT_NULLITY_TOL,
        })
    } else if group.len() == n {
        json!({ "skipped": format!("enumeration limited to {MAX_ENUMERATION_QUBITS} qubits") })
    } else {
        Value::Null
    };
    emit(
        out,
        &json!({
            "command": "stabilizer",
            "n_qubits": n,
            "generators": group.generators().iter().zip(group.signs())
                .map(|(g, &neg)| format!("{}{g}", if neg { '-' } else { '+' }))
                .collect::<Vec<_>>(),
            "pure": group.len() == n,
            "fingerprint": {
                "sha256": fingerprint(&rho),
                "rank": 1usize << (n - group.len()),
                "purity": rho.purity(),
            },
            "conjugation_pauli": sol.base.to_string(),
            "solution_count": sol.count().to_string(),
            "nullspace": sol.nullspace.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "residual": residual,
            "magic": magic,
            "tolerances": { "residual": 1e-10, "fingerprint_rounding": 1e-12 },
        }),
    )?;
    if residual >= 1e-10 {
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}

fn cq_json(v: &CqVerdict) -> Value {
    match v {
        CqVerdict::Decomposition(d) => json!({
            "verdict": "classical_quantum",
            "probabilities": d.probabilities,
        }),
        CqVerdict::NotCommuting { commutator_norm } => json!({
            "verdict": "not_commuting",
            "commutator_norm": commutator_norm,
        }),
        CqVerdict::DegenerateMarginal { min_gap } => json!({
            "verdict": "degenerate_marginal",
            "min_gap": min_gap,
        }),
    }
}

fn qfi(input: &StateArgs, party: Party, cq_tol: f64, out: &mut dyn Write) -> CmdResult {
    let (rho, split) = load(input)?;
    let f_a = intrinsic_ip(&rho, &split, Party::A)?;
    let f_b = intrinsic_ip(&rho, &split, Party::B)?;
    let cq = is_classical_quantum(&rho, &split, party, cq_tol)?;
    let nc = noncommutativity_verdict(&rho, &split, cq_tol)?;
    emit(
        out,
        &json!({
            "command": "qfi",
            "state": state_info(input, &rho),
            "F_A": f_a,
            "F_B": f_b,
            "party": format!("{party:?}"),
            "cq": cq_json(&cq),
            "noncommutativity": nc,
            "tolerances": { "F": 1e-9, "cq_commutator": cq_tol, "support_cutoff": DEFAULT_CUTOFF },
        }),
    )?;
    Ok(EXIT_OK)
}

fn bounds(n: usize, seed: u64, restarts: usize, out: &mut dyn Write) -> CmdResult {
    use rayon::prelude::*;
    let magic: Vec<Result<(), String>> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let q = 2 + (i % 2) as usize;
            let s = derive_seed(seed, i);
            let psi = sample_pure_vector(1 << q, &mut substream(s, 0));
            verify_magic_bounds(&psi, q, restarts, s)
                .map(|_| ())
                .map_err(|e| format!("sample {i}: {e}"))
        })
        .collect();
    let gamma: Vec<Result<f64, String>> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let rho = sample_mixed_state(&[2, 2], &mut substream(derive_seed(seed, 1 << 40 | i), 0));
            let split = Partition::contiguous(&[1, 1]);
            match gamma_qfi_report(&rho, &split) {
                Ok(r) if r.holds() => Ok(r.slacks.iter().copied().fold(f64::INFINITY, f64::min)),
                Ok(r) => Err(format!("sample {i}: slacks {:?}", r.slacks)),
                Err(e) => Err(format!("sample {i}: {e}")),
            }
        })
        .collect();
    let magic_fail: Vec<&String> = magic.iter().filter_map(|r| r.as_ref().err()).collect();
    let gamma_fail: Vec<&String> = gamma.iter().filter_map(|r| r.as_ref().err()).collect();
    let min_slack = gamma.iter().filter_map(|r| r.as_ref().ok()).copied().fold(f64::INFINITY, f64::min);
    emit(
        out,
        &json!({
            "command": "bounds",
            "seed": seed,
            "magic": {
                "samples": n,
                "qubits": [2, 3],
                "restarts": restarts,
                "violations": magic_fail,
            },
            "gamma_qfi": {
                "samples": n,
                "min_slack": if min_slack.is_finite() { json!(min_slack) } else { Value::Null },
                "violations": gamma_fail,
            },
            "tolerances": { "magic_epsilon": MAGIC_EPSILON, "bound_slack": BOUND_SLACK },
        }),
    )?;
    Ok(if magic_fail.is_empty() && gamma_fail.is_empty() { EXIT_OK } else { EXIT_FAILED })
}

fn scan(n: usize, seed: u64, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let s = run_chirality_entanglement_scan(n, seed)?;
    if let Some(p) = path {
        std::fs::write(p, s.to_csv()).map_err(|e| Failure {
            code: EXIT_FAILED,
            message: format!("cannot write {}: {e}", p.display()),
        })?;
    }
    writeln!(out, "{}", s.summary_json()).map_err(|e| Failure {
        code: EXIT_FAILED,
        message: e.to_string(),
    })?;
    Ok(EXIT_OK)
}

fn selftest(criteria: &[u8], out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let numbers: Vec<u8> = if criteria.is_empty() {
        acceptance::CRITERIA.iter().map(|c| c.0).collect()
    } else {
        criteria.to_vec()
    };
    if let Some(bad) = numbers.iter().find(|&&k| !(1..=14).contains(&k)) {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("no criterion {bad}; valid numbers are 1 to 14"),
        });
    }
    let mut failed = 0;
    for k in &numbers {
        let o = acceptance::run(*k);
        let _ = writeln!(out, "criterion {:2} {} {}", o.number, if o.passed { "PASS" } else { "FAIL" }, o.title);
        let _ = writeln!(err, "{o}");
        failed += usize::from(!o.passed);
    }
    let _ = writeln!(out, "{} of {} criteria passed", numbers.len() - failed, numbers.len());
    Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILED })
}
