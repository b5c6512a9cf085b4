use super::{
    linalg::support_threshold, DensityMatrix, EigenDecomposition, Matrix, Vector, C64,
    DEFAULT_CUTOFF,
};
use crate::{Error, Result};

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Full-space index offsets of every multi-index over `subset`, enumerated
/// row-major in the order the subset is given.
pub fn subset_offsets(dims: &[usize], subset: &[usize]) -> Vec<usize> {
    let st = strides(dims);
    let mut out = vec![0usize];
    for &k in subset {
        let mut next = Vec::with_capacity(out.len() * dims[k]);
        for &base in &out {
            for i in 0..dims[k] {
                next.push(base + i * st[k]);
            }
        }
        out = next;
    }
    out
}

fn normalized_subset(dims: &[usize], subset: &[usize]) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != subset.len() {
        return Err(Error::InvalidPartition(format!(
            "repeated subsystem in {subset:?}"
        )));
    }
    if let Some(&bad) = s.iter().find(|&&i| i >= dims.len()) {
        return Err(Error::InvalidPartition(format!(
            "subsystem {bad} out of range for dims {dims:?}"
        )));
    }
    Ok(s)
}

fn complement(n: usize, subset: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !subset.contains(i)).collect()
}

fn check_square(m: &Matrix, dims: &[usize]) -> Result<()> {
    let d: usize = dims.iter().product();
    if m.nrows() != d || m.ncols() != d {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{} but dims {:?} give {}",
            m.nrows(),
            m.ncols(),
            dims,
            d
        )));
    }
    Ok(())
}

/// Kronecker product; subsystem dims are concatenated.
pub fn tensor_product(rho: &DensityMatrix, sigma: &DensityMatrix) -> DensityMatrix {
    let mut dims = rho.dims().to_vec();
    dims.extend_from_slice(sigma.dims());
    DensityMatrix::from_parts_unchecked(dims, rho.data().kronecker(sigma.data()))
}

/// Partial trace of an arbitrary operator onto `keep`. The kept subsystems
/// appear in ascending index order.
pub fn partial_trace_matrix(m: &Matrix, dims: &[usize], keep: &[usize]) -> Result<Matrix> {
    check_square(m, dims)?;
    let keep = normalized_subset(dims, keep)?;
    let rest = complement(dims.len(), &keep);
    let k_off = subset_offsets(dims, &keep);
    let r_off = subset_offsets(dims, &rest);
    let dk = k_off.len();
    let mut out = Matrix::zeros(dk, dk);
    for (i, &ki) in k_off.iter().enumerate() {
        for (j, &kj) in k_off.iter().enumerate() {
            let mut acc = C64::from(0.0);
            for &r in &r_off {
                acc += m[(ki + r, kj + r)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Reduced density matrix on `keep` (ascending order). An empty `keep` would
/// produce the scalar 1 and is rejected.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::Precondition(
            "partial trace over every subsystem leaves a scalar".into(),
        ));
    }
    let data = partial_trace_matrix(rho.data(), rho.dims(), keep)?;
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    let dims = keep_sorted.iter().map(|&k| rho.dims()[k]).collect();
    Ok(DensityMatrix::from_parts_unchecked(dims, data))
}

/// `op ⊗ I` with `op` acting on `subsystems` (ascending order) of a system
/// with dimensions `dims`.
pub fn embed_operator(op: &Matrix, dims: &[usize], subsystems: &[usize]) -> Result<Matrix> {
    let sub = normalized_subset(dims, subsystems)?;
    let sub_dims: Vec<usize> = sub.iter().map(|&k| dims[k]).collect();
    check_square(op, &sub_dims)?;
    let rest = complement(dims.len(), &sub);
    let s_off = subset_offsets(dims, &sub);
    let r_off = subset_offsets(dims, &rest);
    let d: usize = dims.iter().product();
    let mut out = Matrix::zeros(d, d);
    for (i, &si) in s_off.iter().enumerate() {
        for (j, &sj) in s_off.iter().enumerate() {
            let v = op[(i, j)];
            if v == C64::from(0.0) {
                continue;
            }
            for &r in &r_off {
                out[(si + r, sj + r)] = v;
            }
        }
    }
    Ok(out)
}

/// Transposes the indices of the subsystems in `part`.
pub fn partial_transpose_matrix(m: &Matrix, dims: &[usize], part: &[usize]) -> Result<Matrix> {
    check_square(m, dims)?;
    let part = normalized_subset(dims, part)?;
    let rest = complement(dims.len(), &part);
    let p_off = subset_offsets(dims, &part);
    let r_off = subset_offsets(dims, &rest);
    let mut out = Matrix::zeros(m.nrows(), m.ncols());
    for &pi in &p_off {
        for &pj in &p_off {
            for &ri in &r_off {
                for &rj in &r_off {
                    out[(pj + ri, pi + rj)] = m[(pi + ri, pj + rj)];
                }
            }
        }
    }
    Ok(out)
}

pub fn partial_transpose(rho: &DensityMatrix, part: &[usize]) -> Result<Matrix> {
    partial_transpose_matrix(rho.data(), rho.dims(), part)
}

/// Reorders the tensor legs of a vector: leg `k` of the result is leg
/// `order[k]` of the input.
pub fn permute_vector(v: &Vector, dims: &[usize], order: &[usize]) -> Result<Vector> {
    let mut check = order.to_vec();
    check.sort_unstable();
    if check != (0..dims.len()).collect::<Vec<_>>() {
        return Err(Error::InvalidPartition(format!(
            "{order:?} is not a permutation of 0..{}",
            dims.len()
        )));
    }
    let offs = subset_offsets(dims, order);
    Ok(Vector::from_iterator(v.len(), offs.iter().map(|&o| v[o])))
}

/// Canonical purification `|rho> = sum_i sqrt(p_i) |phi_i>|i>` over the
/// support of `rho`, eigenvalues ascending. The ancilla is the last (least
/// significant) tensor factor.
#[derive(Debug, Clone)]
pub struct Purification {
    pub vector: Vector,
    pub system_dims: Vec<usize>,
    pub ancilla_dim: usize,
}

impl Purification {
    pub fn dims(&self) -> Vec<usize> {
        let mut d = self.system_dims.clone();
        d.push(self.ancilla_dim);
        d
    }

    /// Traces out the ancilla.
    pub fn reduced(&self) -> DensityMatrix {
        let dims = self.dims();
        let full = &self.vector * self.vector.adjoint();
        let keep: Vec<usize> = (0..self.system_dims.len()).collect();
        let data = partial_trace_matrix(&full, &dims, &keep).expect("consistent dims");
        DensityMatrix::from_parts_unchecked(self.system_dims.clone(), data)
    }
}

pub fn purify(rho: &DensityMatrix) -> Purification {
    purify_with_cutoff(rho, DEFAULT_CUTOFF)
}

pub(crate) fn purify_with_cutoff(rho: &DensityMatrix, cutoff: f64) -> Purification {
    purify_eig(rho.dims(), &rho.eigen(), cutoff)
}

pub(crate) fn purify_eig(dims: &[usize], eig: &EigenDecomposition, cutoff: f64) -> Purification {
    let thr = support_threshold(&eig.eigenvalues, cutoff);
    let support: Vec<usize> = (0..eig.dim()).filter(|&i| eig.eigenvalues[i] > thr).collect();
    let r = support.len();
    let d = eig.dim();
    let mut v = Vector::zeros(d * r);
    for (a, &i) in support.iter().enumerate() {
        let w = eig.eigenvalues[i].sqrt();
        for s in 0..d {
            v[s * r + a] = eig.eigenvectors[(s, i)] * w;
        }
    }
    Purification {
        vector: v,
        system_dims: dims.to_vec(),
        ancilla_dim: r,
    }
}
