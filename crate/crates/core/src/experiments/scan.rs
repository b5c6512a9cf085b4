use rayon::prelude::*;
use serde::Serialize;

use super::negativity::log_negativity;
use super::sampling::sample_mixed_state;
use super::stats::{median, pearson, spearman};
use crate::chirality::ModularSet;
use crate::qmat::Partition;
use crate::rng;
use crate::Result;

/// Threshold on `|J2|` counted as nonzero.
pub const NONZERO_J2: f64 = 1e-6;
/// `E_N` below this counts as weakly entangled.
pub const LOW_EN: f64 = 0.01;
/// Bound on `|pearson(E_N, |J2|)|` accepted as "no correlation"; calibrated
/// from pilot runs of 5000 samples.
pub const PEARSON_THRESHOLD: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanRow {
    pub sample_index: u64,
    pub e_n: f64,
    pub abs_j2: f64,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSummary {
    pub n: usize,
    pub pearson: f64,
    pub spearman: f64,
    pub frac_low_en_high_j2: f64,
    pub median_j2: f64,
    pub frac_nonzero_j2: f64,
    pub pearson_threshold: f64,
}

#[derive(Debug, Clone)]
pub struct Scan {
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

impl Scan {
    pub fn to_csv(&self) -> String {
        let mut s = String::from("sample_index,E_N,abs_J2,seed\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{:.16e},{:.16e},{}\n",
                r.sample_index, r.e_n, r.abs_j2, r.seed
            ));
        }
        s
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&SummaryJson::from(&self.summary)).expect("plain data")
    }
}

#[derive(Serialize)]
struct SummaryJson {
    n: usize,
    pearson: f64,
    spearman: f64,
    #[serde(rename = "frac_low_EN_high_J2")]
    frac_low_en_high_j2: f64,
    #[serde(rename = "median_J2")]
    median_j2: f64,
    #[serde(rename = "frac_nonzero_J2")]
    frac_nonzero_j2: f64,
    pearson_threshold: f64,
}

impl From<&ScanSummary> for SummaryJson {
    fn from(s: &ScanSummary) -> Self {
        Self {
            n: s.n,
            pearson: s.pearson,
            spearman: s.spearman,
            frac_low_en_high_j2: s.frac_low_en_high_j2,
            median_j2: s.median_j2,
            frac_nonzero_j2: s.frac_nonzero_j2,
            pearson_threshold: s.pearson_threshold,
        }
    }
}

/// One random two-qubit mixed state drawn from stream `index` of `master_seed`.
pub fn scan_sample(master_seed: u64, index: u64) -> Result<ScanRow> {
    let seed = rng::derive_seed(master_seed, index);
    let mut r = rng::stream(seed);
    let rho = sample_mixed_state(&[2, 2], &mut r);
    let split = Partition::contiguous(&[1, 1]);
    let e_n = log_negativity(&rho, &split)?;
    let abs_j2 = ModularSet::new(&rho, &split)?.j2().value.abs();
    Ok(ScanRow {
        sample_index: index,
        e_n,
        abs_j2,
        seed,
    })
}

pub fn summarize(rows: &[ScanRow]) -> ScanSummary {
    let en: Vec<f64> = rows.iter().map(|r| r.e_n).collect();
    let j2: Vec<f64> = rows.iter().map(|r| r.abs_j2).collect();
    let med = median(&j2);
    let n = rows.len();
    let frac = |pred: &dyn Fn(&ScanRow) -> bool| rows.iter().filter(|r| pred(r)).count() as f64 / n as f64;
    ScanSummary {
        n,
        pearson: pearson(&en, &j2),
        spearman: spearman(&en, &j2),
        frac_low_en_high_j2: frac(&|r| r.e_n < LOW_EN && r.abs_j2 > med),
        median_j2: med,
        frac_nonzero_j2: frac(&|r| r.abs_j2 > NONZERO_J2),
        pearson_threshold: PEARSON_THRESHOLD,
    }
}

/// Draws `n_samples` two-qubit states and records `(E_N, |J2|)` for each.
/// Sample `i` uses its own stream derived from `master_seed`, so the output
/// is independent of thread count.
pub fn run_chirality_entanglement_scan(n_samples: usize, master_seed: u64) -> Result<Scan> {
    let rows: Vec<ScanRow> = (0..n_samples as u64)
        .into_par_iter()
        .map(|i| scan_sample(master_seed, i))
        .collect::<Result<_>>()?;
    let summary = summarize(&rows);
    Ok(Scan { rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = run_chirality_entanglement_scan(40, 9).unwrap();
        let b = run_chirality_entanglement_scan(40, 9).unwrap();
        assert_eq!(a.to_csv(), b.to_csv());
        let single = run_chirality_entanglement_scan(1, 9).unwrap();
        assert_eq!(single.rows[0], a.rows[0]);
        assert!(a.rows.iter().all(|r| r.e_n >= -1e-12 && r.abs_j2 >= 0.0));
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = pool.install(|| run_chirality_entanglement_scan(40, 9).unwrap());
        assert_eq!(a.to_csv(), c.to_csv());
    }

    #[test]
    fn csv_layout() {
        let s = run_chirality_entanglement_scan(2, 1).unwrap();
        let csv = s.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "sample_index,E_N,abs_J2,seed");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("0,"));
        let json: serde_json::Value = serde_json::from_str(&s.summary_json()).unwrap();
        for k in ["n", "pearson", "spearman", "frac_low_EN_high_J2", "median_J2"] {
            assert!(json.get(k).is_some(), "{k}");
        }
    }
}
