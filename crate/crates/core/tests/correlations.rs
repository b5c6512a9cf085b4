use chiralkit::chirality::{chiral_log_distance, LogDistanceOptions, Party};
use chiralkit::correlations::{
    gamma_qfi_report, intrinsic_ip, is_classical_quantum, makhlin_invariants, noncommutativity_verdict,
    qfi, sld_apply, sld_integral_form, CqVerdict, Verdict,
};
use chiralkit::experiments::{sample_haar_unitary, sample_mixed_state, sample_simplex};
use chiralkit::qmat::{DensityMatrix, Matrix, Partition, C64, DEFAULT_CUTOFF};
use chiralkit::rng::substream;
use chiralkit::states;
use proptest::prelude::*;

fn split() -> Partition {
    Partition::contiguous(&[1, 1])
}

fn cq_state(seed: u64) -> DensityMatrix {
    let mut rng = substream(seed, 0);
    let u = sample_haar_unitary(2, &mut rng);
    let p = sample_simplex(2, &mut rng);
    let mut m = Matrix::zeros(4, 4);
    for i in 0..2 {
        let col = u.column(i);
        let sigma = sample_mixed_state(&[2], &mut rng);
        m += (col * col.adjoint()).kronecker(sigma.data()) * C64::from(p[i]);
    }
    DensityMatrix::new(vec![2, 2], m).unwrap()
}

#[test]
fn werner_state_certified_by_condition_three() {
    let rho = states::werner_state(0.6);
    let r = noncommutativity_verdict(&rho, &split(), 1e-9).unwrap();
    assert!(matches!(r.verdict, Verdict::NonchiralCertified { condition: 3, .. }));
    let ld = chiral_log_distance(&rho, &split(), &LogDistanceOptions::with_restarts(2, 0)).unwrap();
    assert!(ld.certified_nonchiral);
}

#[test]
fn cq_states_detected_and_reconstructed() {
    for seed in 0..10 {
        let rho = cq_state(seed);
        let v = is_classical_quantum(&rho, &split(), Party::A, 1e-9).unwrap();
        let d = v.decomposition().expect("cq");
        assert!((d.reconstruct() - rho.data()).norm() < 1e-10);
        assert!(intrinsic_ip(&rho, &split(), Party::A).unwrap().abs() < 1e-10);
        let r = noncommutativity_verdict(&rho, &split(), 1e-9).unwrap();
        assert!(r.commutator_a < 1e-9);
    }
}

#[test]
fn generic_state_not_cq_and_undecided() {
    let rho = sample_mixed_state(&[2, 2], &mut substream(5, 5));
    let v = is_classical_quantum(&rho, &split(), Party::A, 1e-9).unwrap();
    assert!(matches!(v, CqVerdict::NotCommuting { .. }));
    let r = noncommutativity_verdict(&rho, &split(), 1e-9).unwrap();
    assert!(!r.verdict.is_certified());
    assert!(intrinsic_ip(&rho, &split(), Party::A).unwrap() > 1e-6);
}

#[test]
fn degenerate_marginal_reported() {
    let bell = states::bell_state().data().clone() * C64::from(0.5)
        + Matrix::identity(4, 4) * C64::from(0.125);
    let rho = DensityMatrix::new(vec![2, 2], bell).unwrap();
    let v = is_classical_quantum(&rho, &split(), Party::A, 1e-9).unwrap();
    assert!(matches!(v, CqVerdict::DegenerateMarginal { .. }));
}

#[test]
fn makhlin_requires_maximally_mixed_marginals() {
    let rho = sample_mixed_state(&[2, 2], &mut substream(1, 1));
    assert!(makhlin_invariants(&rho).is_err());
}

#[test]
fn qfi_of_pure_state_is_four_variances() {
    let rho = states::bell_state();
    let z = chiralkit::qmat::pauli_matrices()[3].kronecker(&Matrix::identity(2, 2));
    assert!((qfi(&rho, &z) - 4.0).abs() < 1e-12);
}

#[test]
fn rank_deficient_integral_form_rejected() {
    let o = Matrix::identity(4, 4);
    assert!(sld_integral_form(&states::bell_state(), &o, 8.0, 256).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn sld_solves_lyapunov_equation(seed in any::<u64>()) {
        let mut rng = substream(seed, 0);
        let rho = sample_mixed_state(&[2, 3], &mut rng);
        let g = chiralkit::experiments::ginibre(6, 6, &mut rng);
        let o = (&g + g.adjoint()) * C64::from(0.5);
        let x = sld_apply(&rho, &o, DEFAULT_CUTOFF);
        let back = (rho.data() * &x + &x * rho.data()) * C64::from(0.5);
        prop_assert!((back - o).norm() < 1e-8 * x.norm().max(1.0));
    }

    #[test]
    fn gamma_qfi_bound_holds(seed in any::<u64>()) {
        let rho = sample_mixed_state(&[2, 2], &mut substream(seed, 2));
        prop_assert!(gamma_qfi_report(&rho, &split()).unwrap().holds());
    }

    #[test]
    fn intrinsic_ip_nonnegative(seed in any::<u64>()) {
        let rho = sample_mixed_state(&[2, 3], &mut substream(seed, 3));
        for party in [Party::A, Party::B] {
            prop_assert!(intrinsic_ip(&rho, &split(), party).unwrap() >= -1e-12);
        }
    }
}
