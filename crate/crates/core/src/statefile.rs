//! JSON state files: `{"dims": [..], "matrix": [[re, im], ..], "label": ".."}`
//! with the matrix stored row-major.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::qmat::{DensityMatrix, Matrix, C64, STATE_TOLERANCE};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum StateFileError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed state file: {0}")]
    Malformed(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a valid density matrix: {0}")]
    Invariant(String),
}

impl StateFileError {
    /// Process exit code: 2 unreadable or malformed, 3 shape, 4 invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            StateFileError::Io { .. } | StateFileError::Malformed(_) => 2,
            StateFileError::Shape(_) => 3,
            StateFileError::Invariant(_) => 4,
        }
    }
}

impl StateFile {
    pub fn from_state(rho: &DensityMatrix, label: Option<String>) -> Self {
        let d = rho.dim();
        let m = rho.data();
        let matrix = (0..d * d)
            .map(|i| {
                let z = m[(i / d, i % d)];
                [z.re, z.im]
            })
            .collect();
        Self {
            dims: rho.dims().to_vec(),
            matrix,
            label,
        }
    }

    pub fn to_state(&self, tol: f64) -> Result<DensityMatrix, StateFileError> {
        if self.dims.is_empty() || self.dims.contains(&0) {
            return Err(StateFileError::Shape(format!("invalid dims {:?}", self.dims)));
        }
        let d = self
            .dims
            .iter()
            .try_fold(1usize, |acc, &x| acc.checked_mul(x))
            .filter(|&d| d <= 1 << 12)
            .ok_or_else(|| StateFileError::Shape(format!("dims {:?} too large", self.dims)))?;
        if self.matrix.len() != d * d {
            return Err(StateFileError::Shape(format!(
                "dims {:?} need {} entries, found {}",
                self.dims,
                d * d,
                self.matrix.len()
            )));
        }
        if self.matrix.iter().flatten().any(|x| !x.is_finite()) {
            return Err(StateFileError::Invariant("non-finite entry".into()));
        }
        let m = Matrix::from_fn(d, d, |i, j| {
            let [re, im] = self.matrix[i * d + j];
            C64::new(re, im)
        });
        DensityMatrix::with_tolerance(self.dims.clone(), m, tol)
            .map_err(|e| StateFileError::Invariant(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

pub fn parse_state_str(text: &str, tol: f64) -> Result<DensityMatrix, StateFileError> {
    let file: StateFile =
        serde_json::from_str(text).map_err(|e| StateFileError::Malformed(e.to_string()))?;
    file.to_state(tol)
}

pub fn parse_state_file(path: &Path) -> Result<DensityMatrix, StateFileError> {
    parse_state_file_with_tolerance(path, STATE_TOLERANCE)
}

pub fn parse_state_file_with_tolerance(path: &Path, tol: f64) -> Result<DensityMatrix, StateFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| StateFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_state_str(&text, tol)
}
