use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_chiralkit"));
    c.env_remove("CHIRALKIT_THREADS");
    c
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write_state(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn assert_within_tolerances(v: &Value) {
    let vals = v["values"].as_object().unwrap();
    assert!(!vals.is_empty());
    for (k, x) in vals {
        let tol = v["tolerances"][k].as_f64().unwrap();
        assert!(x.as_f64().unwrap().abs() <= tol, "{k} = {x} exceeds {tol}");
    }
}

#[test]
fn measure_bell_and_product() {
    let out = run(&["measure", "--state", data("bell.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_within_tolerances(&json(&out));

    let dir = tempfile::tempdir().unwrap();
    // diag(0.7, 0.3) ⊗ diag(0.6, 0.4)
    let mut m = vec!["[0,0]"; 16];
    let d = ["[0.42,0]", "[0.28,0]", "[0.18,0]", "[0.12,0]"];
    for i in 0..4 {
        m[i * 5] = d[i];
    }
    let text = format!("{{\"dims\": [2, 2], \"matrix\": [{}]}}", m.join(","));
    let path = write_state(&dir, "product.json", &text);
    let out = run(&["measure", "--state", &path, "--s", "0.2", "--s", "-1.5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_within_tolerances(&v);
    assert!(v["values"]["gamma"].is_number());
    assert!(v["values"]["phi_s(-1.5)"].is_number());
}

#[test]
fn example1_file_is_qutrit_qubit() {
    let path = data("example1.json");
    let rho = chiralkit::statefile::parse_state_file(&path).unwrap();
    assert_eq!(rho.dims(), &[3, 2]);
    let expected = chiralkit::states::example1_state(&chiralkit::states::EXAMPLE1_WEIGHTS).unwrap();
    assert!((rho.data() - expected.data()).norm() < 1e-15);

    let out = run(&["qfi", "--state", path.to_str().unwrap(), "--party", "A"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["F_A"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(v["cq"]["verdict"], "classical_quantum");
}

#[test]
fn state_file_errors_have_distinct_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("{\"dims\": [2, 2], \"matrix\": [", 2),
        ("{\"dims\": [2, 2], \"matrix\": [[1, 0]]}", 3),
        ("{\"dims\": [2], \"matrix\": [[1,0],[0,0],[0,0],[1,0]]}", 4),
    ];
    for (i, (text, code)) in cases.iter().enumerate() {
        let path = write_state(&dir, &format!("s{i}.json"), text);
        let out = run(&["measure", "--state", &path, "--split", "0|1"]);
        assert_eq!(out.status.code(), Some(*code), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
    }
    let out = run(&["measure", "--state", "/nonexistent/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["measure", "--bogus"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&[]).status.code(), Some(64));
    let bell = data("bell.json");
    let out = run(&["measure", "--state", bell.to_str().unwrap(), "--split", "0,1|1"]);
    assert_eq!(out.status.code(), Some(64));
    let out = bin()
        .args(["measure", "--state", bell.to_str().unwrap()])
        .env("CHIRALKIT_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn stabilizer_ghz_gives_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(&dir, "ghz.txt", "+XXX\n+ZZI\n+IZZ\n");
    let out = run(&["stabilizer", "--tableau", &path]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["conjugation_pauli"], "III");
    assert_eq!(v["magic"]["nullity"], 0);

    let path = write_state(&dir, "mixed.txt", "-YY\n");
    let v = json(&run(&["stabilizer", "--tableau", &path]));
    assert_eq!(v["pure"], false);
    assert!(v["residual"].as_f64().unwrap() < 1e-10);

    let path = write_state(&dir, "bad.txt", "+XI\n+ZI\n");
    assert_eq!(run(&["stabilizer", "--tableau", &path]).status.code(), Some(2));
}

#[test]
fn logdist_is_deterministic() {
    let path = data("example1.json");
    let args = ["logdist", "--state", path.to_str().unwrap(), "--restarts", "6", "--seed", "11"];
    let a = run(&args);
    let b = bin().args(args).env("CHIRALKIT_THREADS", "3").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["upper_estimate"], true);
    assert!(v["best_fidelity"].as_f64().unwrap() < 1.0 - 1e-3);
}

#[test]
fn scan_writes_identical_csv_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let a = bin()
        .args(["scan", "--n", "200", "--seed", "5", "--out", p1.to_str().unwrap()])
        .env("CHIRALKIT_THREADS", "1")
        .output()
        .unwrap();
    let b = bin()
        .args(["scan", "--n", "200", "--seed", "5", "--out", p2.to_str().unwrap()])
        .env("CHIRALKIT_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let (c1, c2) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(c1, c2);
    assert_eq!(String::from_utf8(c1).unwrap().lines().count(), 201);
    assert_eq!(json(&a)["n"], 200);
}

#[test]
fn bounds_suite_passes() {
    let out = run(&["bounds", "--n", "500", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert!(v["magic"]["violations"].as_array().unwrap().is_empty());
    assert!(v["gamma_qfi"]["min_slack"].as_f64().unwrap() >= -1e-8);
}

#[test]
fn selftest_subset() {
    let out = run(&["selftest", "--criterion", "3", "--criterion", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("criterion  3 PASS"));
    assert!(text.ends_with("2 of 2 criteria passed\n"));
    assert_eq!(run(&["selftest", "--criterion", "15"]).status.code(), Some(64));
}
