use std::collections::BTreeMap;

use serde::Serialize;

use super::modular::{Measured, ModularSet};
use crate::qmat::{DensityMatrix, Partition};
use crate::{Error, Result};

/// Floor on the tolerance attached to trace functionals.
const BASE_TOLERANCE: f64 = 1e-9;

/// Named measure values with the tolerance each was computed to.
#[derive(Debug, Clone, Default, Serialize)]
pub struct MeasureReport {
    pub entries: BTreeMap<String, f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub notes: Vec<String>,
}

impl MeasureReport {
    pub fn insert(&mut self, name: impl Into<String>, value: f64, tolerance: f64) {
        let name = name.into();
        self.entries.insert(name.clone(), value);
        self.tolerances.insert(name, tolerance);
    }

    fn insert_measured(&mut self, name: impl Into<String>, m: Measured) {
        self.insert(name, m.value, BASE_TOLERANCE.max(10.0 * m.imag_residue));
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.entries.get(name).copied()
    }
}

/// J2, J3, J3', gamma_s and phi_s at each `s`, and gamma when the state has
/// full rank.
pub fn measure_report(rho: &DensityMatrix, split: &Partition, s_values: &[f64]) -> Result<MeasureReport> {
    let set = ModularSet::new(rho, split)?;
    let mut rep = MeasureReport::default();
    rep.insert_measured("J2", set.j2());
    rep.insert_measured("J3", set.j3());
    rep.insert_measured("J3_prime", set.j3_prime());
    for &s in s_values {
        rep.insert_measured(format!("gamma_s({s})"), set.gamma_s(s));
        rep.insert_measured(format!("phi_s({s})"), set.phi_s(s));
    }
    match set.gamma() {
        Ok(g) => rep.insert("gamma", g.value, BASE_TOLERANCE + g.truncation_bound),
        Err(Error::RankDeficient { min_eigenvalue }) => rep.notes.push(format!(
            "gamma omitted: state is rank deficient (min eigenvalue {min_eigenvalue:.3e})"
        )),
        Err(e) => return Err(e),
    }
    Ok(rep)
}
