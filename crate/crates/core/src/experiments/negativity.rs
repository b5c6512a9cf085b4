use crate::qmat::{partial_transpose, trace_norm, DensityMatrix, Partition};
use crate::Result;

/// `log ||rho^{T_B}||_1` with `B` the second group of `split`, clamped at 0.
pub fn log_negativity(rho: &DensityMatrix, split: &Partition) -> Result<f64> {
    split.expect_groups(2, rho.n_subsystems())?;
    let pt = partial_transpose(rho, &split.groups()[1])?;
    Ok(trace_norm(&pt).max(1.0).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmat::tensor_product;
    use crate::states;

    #[test]
    fn reference_values() {
        let split = Partition::contiguous(&[1, 1]);
        let bell = states::bell_state();
        assert!((log_negativity(&bell, &split).unwrap() - 2f64.ln()).abs() < 1e-12);
        let a = states::qubit_state([0.1, 0.2, 0.3]).unwrap();
        let b = states::qubit_state([0.0, -0.5, 0.5]).unwrap();
        assert!(log_negativity(&tensor_product(&a, &b), &split).unwrap().abs() < 1e-12);
        let ex1 = states::example1_state(&states::EXAMPLE1_WEIGHTS).unwrap();
        assert!(log_negativity(&ex1, &split).unwrap().abs() < 1e-10);
    }
}
