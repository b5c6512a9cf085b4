use std::io::Write;

use chiralkit::acceptance;

fn criterion(number: u8) {
    let outcome = acceptance::run(number);
    let line = format!("{outcome}\n");
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(outcome.passed, "{line}");
}

#[test]
fn criterion_01_stabilizer_nonchirality() {
    criterion(1);
}

#[test]
fn criterion_02_magic_bounds() {
    criterion(2);
}

#[test]
fn criterion_03_t_state() {
    criterion(3);
}

#[test]
fn criterion_04_additivity_oddness_lu() {
    criterion(4);
}

#[test]
fn criterion_05_derivative_relations() {
    criterion(5);
}

#[test]
fn criterion_06_gamma_qfi_bound() {
    criterion(6);
}

#[test]
fn criterion_07_sld_integral_identity() {
    criterion(7);
}

#[test]
fn criterion_08_simplex_entropy_max() {
    criterion(8);
}

#[test]
fn criterion_09_qutrit_qubit_example() {
    criterion(9);
}

#[test]
fn criterion_10_fine_tuned_example() {
    criterion(10);
}

#[test]
fn criterion_11_nonmonotonicity() {
    criterion(11);
}

#[test]
fn criterion_12_maximally_mixed_marginals() {
    criterion(12);
}

#[test]
fn criterion_13_scan() {
    criterion(13);
}

#[test]
fn criterion_14_intrinsic_ip() {
    criterion(14);
}
