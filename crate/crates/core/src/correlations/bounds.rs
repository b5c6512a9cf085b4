use rand::Rng;
use serde::Serialize;

use super::qfi::{intrinsic_ip, modular_hamiltonian};
use crate::chirality::{ModularSet, Party};
use crate::experiments::sample_simplex;
use crate::qmat::{DensityMatrix, Partition};
use crate::{rng, Error, Result};

/// Maximum of `sum_i x_i (log x_i)^2` over the qubit simplex, rounded up
/// to three digits (the maximizer is near `x = (0.839, 0.161)`).
pub const C_QUBIT: f64 = 0.563;

/// Slack allowed in the gamma/QFI inequalities.
pub const BOUND_SLACK: f64 = 1e-8;

/// `c(d)`: [`C_QUBIT`] for `d = 2`, `(log d)^2` for `d >= 3`, 0 for `d = 1`.
pub fn c_constant(d: usize) -> f64 {
    match d {
        0 | 1 => 0.0,
        2 => C_QUBIT,
        _ => (d as f64).ln().powi(2),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GammaQfiReport {
    pub gamma: f64,
    pub gamma_truncation_bound: f64,
    pub f_a: f64,
    pub f_b: f64,
    /// `Tr(rho_A K_A^2)` and `Tr(rho_B K_B^2)`.
    pub second_moment_a: f64,
    pub second_moment_b: f64,
    pub c_a: f64,
    pub c_b: f64,
    /// `rhs - |gamma|^2` for the four inequalities, in the order
    /// `(moment_A F_B, moment_B F_A, c(d_A) F_B, c(d_B) F_A)`.
    pub slacks: [f64; 4],
}

impl GammaQfiReport {
    pub fn holds(&self) -> bool {
        self.slacks.iter().all(|&s| s >= -BOUND_SLACK)
    }
}

/// Evaluates `|gamma|^2 <= Tr(rho_A K_A^2) F^(B)`, its A/B mirror, and the
/// dimension-only forms with `c(d)`. Fails with the state dump on violation.
pub fn check_gamma_qfi_bound(rho: &DensityMatrix, split: &Partition) -> Result<GammaQfiReport> {
    let report = gamma_qfi_report(rho, split)?;
    if !report.holds() {
        return Err(Error::BoundViolation(format!(
            "gamma/QFI inequality violated: {report:?}; state dims {:?}, matrix {:?}",
            rho.dims(),
            rho.data().as_slice()
        )));
    }
    Ok(report)
}

pub fn gamma_qfi_report(rho: &DensityMatrix, split: &Partition) -> Result<GammaQfiReport> {
    let set = ModularSet::new(rho, split)?;
    let g = set.gamma()?;
    let f_a = intrinsic_ip(rho, split, Party::A)?;
    let f_b = intrinsic_ip(rho, split, Party::B)?;
    let moment = |party: Party| -> Result<f64> {
        let k = modular_hamiltonian(rho, split, party)?;
        Ok((rho.data() * &k * &k).trace().re)
    };
    let second_moment_a = moment(Party::A)?;
    let second_moment_b = moment(Party::B)?;
    let dim = |g: &[usize]| g.iter().map(|&k| rho.dims()[k]).product::<usize>();
    let c_a = c_constant(dim(&split.groups()[0]));
    let c_b = c_constant(dim(&split.groups()[1]));
    let g2 = g.value * g.value;
    Ok(GammaQfiReport {
        gamma: g.value,
        gamma_truncation_bound: g.truncation_bound,
        f_a,
        f_b,
        second_moment_a,
        second_moment_b,
        c_a,
        c_b,
        slacks: [
            second_moment_a * f_b - g2,
            second_moment_b * f_a - g2,
            c_a * f_b - g2,
            c_b * f_a - g2,
        ],
    })
}

fn entropy_moment(x: &[f64]) -> f64 {
    x.iter()
        .map(|&v| if v > 0.0 { v * v.ln().powi(2) } else { 0.0 })
        .sum()
}

fn gradient(x: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|&v| {
            let l = v.max(1e-300).ln();
            l * l + 2.0 * l
        })
        .collect()
}

/// Euclidean projection onto the probability simplex.
pub fn project_to_simplex(y: &[f64]) -> Vec<f64> {
    let mut u = y.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        cumulative += ui;
        let t = (cumulative - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&v| (v - theta).max(0.0)).collect()
}

fn ascend(mut x: Vec<f64>) -> (f64, Vec<f64>) {
    let mut f = entropy_moment(&x);
    let mut step = 0.1;
    for _ in 0..5000 {
        let g = gradient(&x);
        let mut improved = false;
        while step > 1e-16 {
            let y: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a + step * b).collect();
            let cand = project_to_simplex(&y);
            let fc = entropy_moment(&cand);
            if fc > f {
                let gain = fc - f;
                x = cand;
                f = fc;
                step *= 2.0;
                improved = gain > 1e-16;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (f, x)
}

/// Numerical `max sum_i x_i (log x_i)^2` over the `d`-simplex by projected
/// gradient ascent with backtracking from 100 random starts.
pub fn simplex_entropy_max(d: usize) -> f64 {
    simplex_entropy_argmax(d).0
}

pub fn simplex_entropy_argmax(d: usize) -> (f64, Vec<f64>) {
    assert!(d >= 2, "need d >= 2");
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for start in 0..100u64 {
        let mut r = rng::substream(0x5157_u64 + d as u64, start);
        let x0 = random_start(d, &mut r);
        let cand = ascend(x0);
        if cand.0 > best.0 {
            best = cand;
        }
    }
    best
}

fn random_start<R: Rng + ?Sized>(d: usize, r: &mut R) -> Vec<f64> {
    sample_simplex(d, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::sample_mixed_state;
    use crate::qmat::tensor_product;
    use crate::states;

    #[test]
    fn simplex_maxima() {
        let (c2, x) = simplex_entropy_argmax(2);
        assert!((c2 - C_QUBIT).abs() < 1e-3);
        let hi = x[0].max(x[1]);
        assert!((hi - 0.839).abs() < 1e-3, "{x:?}");
        for d in 3..=8 {
            assert!((simplex_entropy_max(d) - (d as f64).ln().powi(2)).abs() < 1e-3, "d = {d}");
        }
    }

    #[test]
    fn projection() {
        let p = project_to_simplex(&[0.5, 0.5, 0.5]);
        for v in p {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(project_to_simplex(&[2.0, 0.0]), vec![1.0, 0.0]);
    }

    #[test]
    fn product_state_bound() {
        let a = states::qubit_state([0.1, 0.2, 0.3]).unwrap();
        let b = states::qubit_state([0.2, -0.1, 0.4]).unwrap();
        let rep = check_gamma_qfi_bound(&tensor_product(&a, &b), &Partition::contiguous(&[1, 1])).unwrap();
        assert!(rep.gamma.abs() < 1e-12);
    }

    #[test]
    fn random_states_satisfy_bound() {
        let mut r = rng::stream(4);
        for _ in 0..50 {
            let rho = sample_mixed_state(&[2, 2], &mut r);
            check_gamma_qfi_bound(&rho, &Partition::contiguous(&[1, 1])).unwrap();
        }
    }

    #[test]
    fn regularized_example1() {
        let rho = states::example1_state(&states::EXAMPLE1_WEIGHTS).unwrap().mix_with_identity(1e-6);
        let rep = check_gamma_qfi_bound(&rho, &Partition::contiguous(&[1, 1])).unwrap();
        assert!(rep.gamma.abs() < 1e-4);
        assert!(rep.f_a < 1e-4);
    }

    #[test]
    fn rank_deficient_rejected() {
        let rho = states::bell_state();
        assert!(matches!(
            check_gamma_qfi_bound(&rho, &Partition::contiguous(&[1, 1])),
            Err(Error::RankDeficient { .. })
        ));
    }
}
