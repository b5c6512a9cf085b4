use chiralkit::experiments::{
    log_negativity, nonmonotonicity_demo, run_chirality_entanglement_scan, sample_mixed_state,
};
use chiralkit::qmat::{Partition, STATE_TOLERANCE};
use chiralkit::rng::substream;
use chiralkit::statefile::{parse_state_file, parse_state_str, StateFile};
use chiralkit::states;

#[test]
fn scan_is_thread_count_independent() {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let a = one.install(|| run_chirality_entanglement_scan(64, 9).unwrap());
    let b = four.install(|| run_chirality_entanglement_scan(64, 9).unwrap());
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.summary_json(), b.summary_json());
    let other = run_chirality_entanglement_scan(64, 10).unwrap();
    assert_ne!(a.to_csv(), other.to_csv());
}

#[test]
fn scan_rows_are_sorted_and_consistent() {
    let s = run_chirality_entanglement_scan(20, 3).unwrap();
    for (i, r) in s.rows.iter().enumerate() {
        assert_eq!(r.sample_index, i as u64);
        assert!(r.e_n >= 0.0 && r.abs_j2 >= 0.0);
    }
    let csv = s.to_csv();
    assert!(csv.starts_with("sample_index,E_N,abs_J2,seed\n"));
    assert_eq!(csv.lines().count(), 21);
}

#[test]
fn negativity_bounds() {
    let split = Partition::contiguous(&[1, 1]);
    assert!((log_negativity(&states::bell_state(), &split).unwrap() - 2f64.ln()).abs() < 1e-12);
    for seed in 0..20 {
        let rho = sample_mixed_state(&[2, 2], &mut substream(seed, 0));
        let e = log_negativity(&rho, &split).unwrap();
        assert!((-1e-12..=2f64.ln() + 1e-12).contains(&e));
    }
}

#[test]
fn demo_shows_increase_under_partial_trace() {
    let r = nonmonotonicity_demo(states::EXAMPLE1_WEIGHTS, 8, 1).unwrap();
    assert!(r.purified_value < 1e-6);
    assert!(r.reduced_value > 1e-3);
    assert!((r.reduced_value - r.traced_a_value).abs() < 1e-6);
}

#[test]
fn state_file_round_trip_on_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    let rho = states::werner_state(0.3);
    std::fs::write(&path, StateFile::from_state(&rho, Some("werner".into())).to_json()).unwrap();
    let back = parse_state_file(&path).unwrap();
    assert!((back.data() - rho.data()).norm() < 1e-15);
    std::fs::write(&path, "{\"dims\": [2, 2], \"matrix\": [").unwrap();
    assert_eq!(parse_state_file(&path).unwrap_err().exit_code(), 2);
    let e = parse_state_str("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0],[0,0]], \"extra\": 1}", STATE_TOLERANCE);
    assert_eq!(e.unwrap_err().exit_code(), 2);
}
