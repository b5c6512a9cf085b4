use std::hint::black_box;

use chiralkit::chirality::{chiral_log_distance, pauli_log_distance, LogDistanceOptions, ModularSet};
use chiralkit::correlations::{gamma_qfi_report, intrinsic_ip};
use chiralkit::experiments::run_chirality_entanglement_scan;
use chiralkit::qmat::Partition;
use chiralkit::stabilizer::{stabilizer_fidelity, StabilizerGroup};
use chiralkit::{chirality::Party, rng::substream, states};
use chiralkit_bench::{mixed, pure};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn modular(c: &mut Criterion) {
    let split = Partition::contiguous(&[1, 1]);
    let mut g = c.benchmark_group("modular");
    for dims in [[2usize, 2], [2, 3], [4, 4]] {
        let rho = mixed(&dims, 1);
        let id = format!("{}x{}", dims[0], dims[1]);
        g.bench_with_input(BenchmarkId::new("modular_set", &id), &rho, |b, r| {
            b.iter(|| ModularSet::new(black_box(r), &split).unwrap())
        });
        let set = ModularSet::new(&rho, &split).unwrap();
        g.bench_with_input(BenchmarkId::new("j2_j3", &id), &set, |b, s| {
            b.iter(|| (s.j2().value, s.j3().value))
        });
        g.bench_with_input(BenchmarkId::new("gamma", &id), &set, |b, s| b.iter(|| s.gamma().unwrap().value));
    }
    g.finish();
}

fn correlations(c: &mut Criterion) {
    let split = Partition::contiguous(&[1, 1]);
    let rho = mixed(&[2, 2], 2);
    c.bench_function("intrinsic_ip_2x2", |b| b.iter(|| intrinsic_ip(black_box(&rho), &split, Party::A).unwrap()));
    c.bench_function("gamma_qfi_report_2x2", |b| b.iter(|| gamma_qfi_report(black_box(&rho), &split).unwrap()));
}

fn log_distance(c: &mut Criterion) {
    let rho = states::example1_state(&states::EXAMPLE1_WEIGHTS).unwrap();
    let split = Partition::contiguous(&[1, 1]);
    let opts = LogDistanceOptions::with_restarts(4, 0);
    let mut g = c.benchmark_group("log_distance");
    g.sample_size(20);
    g.bench_function("example1_4_restarts", |b| {
        b.iter(|| chiral_log_distance(black_box(&rho), &split, &opts).unwrap().value)
    });
    let psi = pure(8, 3);
    let three = chiralkit::qmat::DensityMatrix::from_pure(vec![2; 3], &psi).unwrap();
    g.bench_function("haar_3_qubit_4_restarts", |b| {
        b.iter(|| chiral_log_distance(black_box(&three), &Partition::singletons(3), &opts).unwrap().value)
    });
    g.finish();
}

fn stabilizer(c: &mut Criterion) {
    let mut g = c.benchmark_group("stabilizer");
    for n in [3usize, 5, 7] {
        let psi = pure(1 << n, n as u64);
        g.bench_with_input(BenchmarkId::new("pauli_log_distance", n), &psi, |b, p| {
            b.iter(|| pauli_log_distance(black_box(p), n).unwrap().value)
        });
    }
    let psi = pure(16, 4);
    stabilizer_fidelity(&psi, 4).unwrap();
    g.bench_function("fidelity_4_qubits", |b| b.iter(|| stabilizer_fidelity(black_box(&psi), 4).unwrap()));
    let group = StabilizerGroup::random(6, 4, &mut substream(5, 0));
    g.bench_function("conjugation_pauli_6_qubits", |b| b.iter(|| black_box(&group).conjugation_pauli()));
    g.finish();
}

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan");
    g.sample_size(10);
    g.bench_function("256_samples", |b| b.iter(|| run_chirality_entanglement_scan(256, black_box(7)).unwrap()));
    g.finish();
}

criterion_group!(benches, modular, correlations, log_distance, stabilizer, scan);
criterion_main!(benches);
