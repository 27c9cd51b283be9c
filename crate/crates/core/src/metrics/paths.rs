//! Hop distances and path-length indices.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Symmetric matrix of hop distances; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

const UNREACHABLE: u32 = u32::MAX;

impl DistanceTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> Option<u32> {
        let d = self.dist[u * self.n + v];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn row(&self, u: VertexId) -> impl Iterator<Item = Option<u32>> + '_ {
        self.dist[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&d| (d != UNREACHABLE).then_some(d))
    }
}

/// BFS hop distances from `source`; unreachable vertices get `u32::MAX`.
pub(crate) fn bfs(g: &Graph, source: VertexId, out: &mut [u32], queue: &mut VecDeque<VertexId>) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = out[u] + 1;
        for &w in g.neighbors(u) {
            if out[w] == UNREACHABLE {
                out[w] = next;
                queue.push_back(w);
            }
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::with_capacity(n);
    for s in g.vertices() {
        bfs(g, s, &mut dist[s * n..(s + 1) * n], &mut queue);
    }
    DistanceTable { n, dist }
}

/// How a vertex's mean distance is formed for the characteristic path length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMeanConvention {
    /// Row mean of the distance matrix over all `n_c` vertices of the
    /// component, the zero self-distance included (`Σ_t d(v,t) / n_c`).
    /// This is what reproduces the published random-graph baseline.
    #[default]
    RowMean,
    /// Mean over the `n_c - 1` other vertices.
    ExcludeSelf,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PathMetrics {
    /// Mean shortest-path length over unordered pairs.
    pub mean_path_length: f64,
    /// Median over vertices of each vertex's mean distance.
    pub characteristic_path_length: f64,
    pub diameter: u32,
    /// Vertices of the component the metrics were computed on.
    pub component_size: usize,
    pub convention: PathMeanConvention,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let k = values.len();
    if k % 2 == 1 {
        values[k / 2]
    } else {
        0.5 * (values[k / 2 - 1] + values[k / 2])
    }
}

/// Path indices on the largest connected component.
pub fn path_metrics(g: &Graph, convention: PathMeanConvention) -> Result<PathMetrics> {
    let comp = g.largest_component();
    if comp.len() < 2 {
        return Err(Error::Undefined(
            "path metrics need a component with at least 2 vertices".into(),
        ));
    }
    let sub;
    let h = if comp.len() == g.vertex_count() {
        g
    } else {
        sub = g.induced_subgraph(&comp)?;
        &sub
    };
    let nc = h.vertex_count();
    let mut row = vec![0u32; nc];
    let mut queue = VecDeque::with_capacity(nc);
    let mut total: u64 = 0;
    let mut diameter = 0;
    let mut means = Vec::with_capacity(nc);
    for s in h.vertices() {
        bfs(h, s, &mut row, &mut queue);
        let sum: u64 = row.iter().map(|&d| u64::from(d)).sum();
        diameter = diameter.max(*row.iter().max().unwrap_or(&0));
        total += sum;
        let denom = match convention {
            PathMeanConvention::RowMean => nc,
            PathMeanConvention::ExcludeSelf => nc - 1,
        };
        means.push(sum as f64 / denom as f64);
    }
    let pairs = (nc * (nc - 1)) as f64;
    Ok(PathMetrics {
        mean_path_length: total as f64 / pairs,
        characteristic_path_length: median(&mut means),
        diameter,
        component_size: nc,
        convention,
    })
}
