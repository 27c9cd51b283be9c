//! Clustering coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Clustering {
    /// Mean neighborhood density (C1).
    pub mean_local: f64,
    /// Transitivity: 3 x triangles / connected triples (C2).
    pub transitivity: f64,
}

fn common_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Number of edges among the neighbors of each vertex (= triangles through it).
pub fn local_triangles(g: &Graph) -> Vec<usize> {
    let mut t = vec![0; g.vertex_count()];
    for (u, v) in g.edges() {
        // each triangle {u, v, w} is seen once per edge; credit the opposite vertex
        let nu = g.neighbors(u);
        let nv = g.neighbors(v);
        let (mut i, mut j) = (0, 0);
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    t[nu[i]] += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    t
}

/// Mean over vertices of the density of the open neighborhood; vertices of
/// degree 0 or 1 contribute 0.
pub fn mean_local_clustering(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Undefined("C1 of an empty graph".into()));
    }
    let tri = local_triangles(g);
    let sum: f64 = g
        .vertices()
        .map(|v| {
            let d = g.degree(v);
            if d < 2 {
                0.0
            } else {
                tri[v] as f64 / (d * (d - 1) / 2) as f64
            }
        })
        .sum();
    Ok(sum / n as f64)
}

pub fn triangle_count(g: &Graph) -> usize {
    g.edges()
        .map(|(u, v)| {
            // count w > v so every triangle u < v < w is counted once
            let nu = g.neighbors(u);
            let nv = g.neighbors(v);
            let su = nu.partition_point(|&w| w <= v);
            let sv = nv.partition_point(|&w| w <= v);
            common_count(&nu[su..], &nv[sv..])
        })
        .sum()
}

pub fn connected_triples(g: &Graph) -> usize {
    g.vertices()
        .map(|v| {
            let d = g.degree(v);
            d * d.saturating_sub(1) / 2
        })
        .sum()
}

pub fn transitivity(g: &Graph) -> Result<f64> {
    let triples = connected_triples(g);
    if triples == 0 {
        return Err(Error::Undefined(
            "C2 needs at least one connected triple".into(),
        ));
    }
    Ok(3.0 * triangle_count(g) as f64 / triples as f64)
}

pub fn clustering(g: &Graph) -> Result<Clustering> {
    Ok(Clustering {
        mean_local: mean_local_clustering(g)?,
        transitivity: transitivity(g)?,
    })
}
