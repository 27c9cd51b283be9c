//! Dense symmetric eigendecomposition with a deterministic sign convention.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SymEigen {
    /// Eigenvalues in the requested order.
    pub values: Vec<f64>,
    /// Column `j` is the unit eigenvector of `values[j]`.
    pub vectors: DMatrix<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Ascending,
    Descending,
}

/// Flips `v` so that its entry of largest magnitude is positive. Entries
/// within `1e-9` (relative) of the maximum count as tied; the first wins.
pub fn fix_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    let pivot = v
        .iter()
        .position(|x| x.abs() >= max * (1.0 - 1e-9))
        .expect("max exists");
    if v[pivot] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

pub fn sym_eigen(matrix: &DMatrix<f64>, order: Order) -> Result<SymEigen> {
    let n = matrix.nrows();
    if n == 0 {
        return Ok(SymEigen {
            values: Vec::new(),
            vectors: DMatrix::zeros(0, 0),
        });
    }
    let eig = nalgebra::SymmetricEigen::try_new(matrix.clone(), f64::EPSILON, 10_000)
        .ok_or_else(|| Error::Eigen(format!("no convergence on a {n}x{n} matrix")))?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        let o = eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]);
        match order {
            Order::Ascending => o,
            Order::Descending => o.reverse(),
        }
        .then(a.cmp(&b))
    });
    let scale = matrix.amax().max(1.0);
    let mut values = Vec::with_capacity(n);
    let mut vectors = DMatrix::zeros(n, n);
    for (j, &i) in idx.iter().enumerate() {
        let lambda = eig.eigenvalues[i];
        let mut col: Vec<f64> = eig.eigenvectors.column(i).iter().copied().collect();
        fix_sign(&mut col);
        let q = nalgebra::DVector::from_vec(col);
        let residual = (matrix * &q - &q * lambda).amax();
        if residual > 1e-8 * scale {
            return Err(Error::Eigen(format!(
                "residual {residual:e} for eigenvalue {lambda:e} (index {j})"
            )));
        }
        vectors.set_column(j, &q);
        values.push(lambda);
    }
    Ok(SymEigen { values, vectors })
}
