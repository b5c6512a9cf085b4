//! Random-state ensembles, logarithmic negativity and the chirality versus
//! entanglement scan.

mod demo;
mod negativity;
mod sampling;
mod scan;
pub mod stats;

pub use demo::{nonmonotonicity_demo, NonmonotonicityReport};
pub use negativity::log_negativity;
pub use sampling::{
    ginibre, sample_haar_unitary, sample_local_unitary, sample_mixed_state, sample_pure_vector,
    sample_simplex,
};
pub use scan::{
    run_chirality_entanglement_scan, scan_sample, Scan, ScanRow, ScanSummary, LOW_EN, NONZERO_J2,
    PEARSON_THRESHOLD,
};
