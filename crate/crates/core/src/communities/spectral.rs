//! Spectral partitioning on the normalized Laplacian
//! `L = I − D^{-1/2} A D^{-1/2}`.
//!
//! Each connected component is handled on its own (isolated vertices are
//! singletons). For `k = 1..=kmax` the component's vertices are embedded as
//! the rows of its `k` smallest-eigenvalue eigenvectors (no row
//! renormalization) and clustered with k-means; the `k` whose classes give
//! the largest modularity contribution is kept, ties going to the smaller
//! `k`. `k = 1` is always a candidate, so a component is never split when
//! every split lowers modularity.

use nalgebra::DMatrix;

use super::{kmeans, Method, Partition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::linalg::{sym_eigen, Order};
use crate::rng::derive_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralOptions {
    /// Largest cluster count tried; `None` means `ceil(sqrt(n)) + 2`.
    pub kmax: Option<usize>,
    pub restarts: usize,
    pub seed: u64,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        Self {
            kmax: None,
            restarts: 16,
            seed: 0,
        }
    }
}

pub fn default_kmax(n: usize) -> usize {
    (n as f64).sqrt().ceil() as usize + 2
}

/// `Σ_classes (4m·m_i − D_i²)` restricted to the given classes.
fn contribution(g: &Graph, classes: &[Vec<VertexId>], membership: &mut [usize]) -> i128 {
    let m = g.edge_count() as i128;
    let mut total = 0i128;
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            membership[v] = c;
        }
    }
    for class in classes {
        let c = membership[class[0]];
        let mut inside = 0i128;
        let mut deg = 0i128;
        for &u in class {
            deg += g.degree(u) as i128;
            inside += g
                .neighbors(u)
                .iter()
                .filter(|&&w| w > u && membership[w] == c)
                .count() as i128;
        }
        total += 4 * m * inside - deg * deg;
    }
    total
}

fn component_embedding(g: &Graph, comp: &[VertexId]) -> Result<DMatrix<f64>> {
    let k = comp.len();
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in comp.iter().enumerate() {
        pos[v] = i;
    }
    let inv_sqrt: Vec<f64> = comp.iter().map(|&v| 1.0 / (g.degree(v) as f64).sqrt()).collect();
    let mut lap = DMatrix::<f64>::identity(k, k);
    for (i, &v) in comp.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = pos[w];
            lap[(i, j)] -= inv_sqrt[i] * inv_sqrt[j];
        }
    }
    Ok(sym_eigen(&lap, Order::Ascending)?.vectors)
}

pub fn spectral_partition(g: &Graph, opts: SpectralOptions) -> Result<Partition> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Err(Error::Undefined("spectral partition needs at least one edge".into()));
    }
    let kmax = opts.kmax.unwrap_or_else(|| default_kmax(n));
    if kmax < 2 {
        return Err(Error::InvalidParameter(format!("kmax must be >= 2, got {kmax}")));
    }
    let mut membership = vec![usize::MAX; n];
    let mut scratch = vec![usize::MAX; n];
    let mut next_class = 0;
    for (ci, comp) in g.connected_components().into_iter().enumerate() {
        if comp.len() < 3 {
            for &v in &comp {
                membership[v] = next_class;
            }
            next_class += 1;
            continue;
        }
        let vectors = component_embedding(g, &comp)?;
        let mut best: (i128, Vec<Vec<VertexId>>) =
            (contribution(g, std::slice::from_ref(&comp), &mut scratch), vec![comp.clone()]);
        for k in 2..=kmax.min(comp.len()) {
            let points: Vec<Vec<f64>> = (0..comp.len())
                .map(|i| (0..k).map(|j| vectors[(i, j)]).collect())
                .collect();
            let seed = derive_seed(opts.seed, &format!("spectral/{ci}/{k}"));
            let fit = kmeans(&points, k, opts.restarts, seed);
            let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); k];
            for (i, &a) in fit.assignment.iter().enumerate() {
                classes[a].push(comp[i]);
            }
            classes.retain(|c| !c.is_empty());
            let score = contribution(g, &classes, &mut scratch);
            if score > best.0 {
                best = (score, classes);
            }
        }
        for class in best.1 {
            for v in class {
                membership[v] = next_class;
            }
            next_class += 1;
        }
    }
    Partition::from_membership(g, &membership, Method::Spectral)
}
