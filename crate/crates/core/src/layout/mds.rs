//! Classical scaling and removal of a variable's direction from the
//! resulting coordinates.

use nalgebra::{DMatrix, DVector};

use super::dissimilarity::{min_max, DissimilarityMatrix};
use crate::error::{Error, Result};
use crate::linalg::{sym_eigen, Order};

/// Eigenvalues below `DEFAULT_TOL_FACTOR · λmax` are treated as zero.
pub const DEFAULT_TOL_FACTOR: f64 = 1e-10;

/// Double-centered inner products with their decomposition
/// (eigenvalues non-increasing, sign-fixed unit eigenvectors as columns).
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub w: DMatrix<f64>,
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

/// `w_ij = −½(d²_ij − d²_i· − d²_·j + d²_··)` with row, column and grand
/// means of the squared dissimilarities.
pub fn gram_from_distances(dm: &DissimilarityMatrix) -> Result<GramMatrix> {
    let n = dm.len();
    let d2 = DMatrix::from_fn(n, n, |i, j| dm.delta_squared(i, j));
    let row: Vec<f64> = (0..n).map(|i| d2.row(i).sum() / n as f64).collect();
    let grand = row.iter().sum::<f64>() / n.max(1) as f64;
    let mut w = DMatrix::from_fn(n, n, |i, j| -0.5 * (d2[(i, j)] - row[i] - row[j] + grand));
    // exact symmetry for the solver
    for i in 0..n {
        for j in 0..i {
            let x = 0.5 * (w[(i, j)] + w[(j, i)]);
            w[(i, j)] = x;
            w[(j, i)] = x;
        }
    }
    let eig = sym_eigen(&w, Order::Descending)?;
    Ok(GramMatrix {
        w,
        values: eig.values,
        vectors: eig.vectors,
    })
}

/// Principal coordinates: rows are points, column `j` is `q_j·√λ_j`.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub x: DMatrix<f64>,
    /// Retained eigenvalues, non-increasing.
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Embedding {
    pub fn dimensions(&self) -> usize {
        self.x.ncols()
    }

    /// Principal component `j` (column `j` of `X`).
    pub fn component(&self, j: usize) -> Vec<f64> {
        self.x.column(j).iter().copied().collect()
    }
}

/// Keeps eigenpairs with `λ > tol` (default `1e-10·λmax`). A most-negative
/// eigenvalue below `−100·tol` means the input was not Euclidean.
pub fn principal_coordinates(gram: &GramMatrix, tol: Option<f64>) -> Result<Embedding> {
    let n = gram.w.nrows();
    let lmax = gram.values.first().copied().unwrap_or(0.0);
    let tol = tol.unwrap_or(DEFAULT_TOL_FACTOR * lmax.max(0.0));
    if let Some(&lmin) = gram.values.last() {
        if lmin < -100.0 * tol && lmin < -1e-12 {
            return Err(Error::NonEuclidean(lmin));
        }
    }
    let keep = gram.values.iter().take_while(|&&l| l > tol).count();
    let x = DMatrix::from_fn(n, keep, |i, j| gram.vectors[(i, j)] * gram.values[j].sqrt());
    Ok(Embedding {
        x,
        eigenvalues: gram.values[..keep].to_vec(),
        tol,
    })
}

/// Pearson correlation, `None` when either side has no variance.
pub fn correlation(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if saa == 0.0 || sbb == 0.0 {
        return None;
    }
    Some(sab / (saa.sqrt() * sbb.sqrt()))
}

#[derive(Debug, Clone)]
pub struct Projection {
    /// Unit vector removed from the coordinates.
    pub a: DVector<f64>,
    /// `Y = X(I − aa')`.
    pub y: DMatrix<f64>,
}

/// Removes the direction of `ctilde` from `X`.
///
/// Coordinate `j` of `a` in the basis `u_j = √λ_j·z_j` is the correlation of
/// `ctilde` with component `j`; in orthonormal coordinates that is
/// `ρ_j·√λ_j`, proportional to `X'(c̃ − mean)`. After the projection every
/// column of `Y`, hence every principal component of `Y`, is uncorrelated
/// with `ctilde`.
pub fn project_out_variable(emb: &Embedding, ctilde: &[f64]) -> Result<Projection> {
    let n = emb.x.nrows();
    if ctilde.len() != n {
        return Err(Error::InvalidParameter(format!(
            "variable has {} values for {n} points",
            ctilde.len()
        )));
    }
    let (lo, hi) = min_max(ctilde);
    if !(hi > lo) {
        return Err(Error::Degenerate("projected variable is constant".into()));
    }
    let mut a = DVector::zeros(emb.dimensions());
    for j in 0..emb.dimensions() {
        let rho = correlation(ctilde, &emb.component(j)).unwrap_or(0.0);
        a[j] = rho * emb.eigenvalues[j].sqrt();
    }
    let norm = a.norm();
    let scale = emb.eigenvalues.first().map_or(0.0, |l| l.sqrt());
    if !(norm > 1e-12 * scale.max(f64::MIN_POSITIVE)) {
        return Err(Error::Degenerate(
            "variable is uncorrelated with every principal component".into(),
        ));
    }
    a /= norm;
    let p = DMatrix::identity(a.len(), a.len()) - &a * a.transpose();
    Ok(Projection { y: &emb.x * p, a })
}

/// Principal components of the rows of `y` (centered data), largest
/// variance first: `c_j = q_j·√λ_j` from the eigenpairs of `YY'` with
/// `λ_j > tol`.
pub fn principal_components(y: &DMatrix<f64>, tol: f64) -> Result<Vec<Vec<f64>>> {
    let yy = y * y.transpose();
    let eig = sym_eigen(&yy, Order::Descending)?;
    Ok(eig
        .values
        .iter()
        .enumerate()
        .take_while(|(_, &l)| l > tol)
        .map(|(j, &l)| eig.vectors.column(j).iter().map(|q| q * l.sqrt()).collect())
        .collect())
}

/// `θ = π·(c1 − min)/(max − min)`.
pub fn angular_coords(c1: &[f64]) -> Result<Vec<f64>> {
    let (min, max) = min_max(c1);
    if !(max > min) {
        return Err(Error::Degenerate("first principal component is constant".into()));
    }
    Ok(c1
        .iter()
        .map(|&c| std::f64::consts::PI * ((c - min) / (max - min)))
        .collect())
}
