//! Modularity-based community detection.
//!
//! Modularity of a partition `V_1..V_k` of a graph with `m` edges is
//! `M = Σ_i [ m_i/m − (D_i / 2m)² ]`, with `m_i` the edges inside `V_i` and
//! `D_i` its degree sum. Internally `M·4m² = Σ_i (4m·m_i − D_i²)` is kept as
//! an exact integer so that merge and cut decisions never depend on
//! rounding.

mod fast_greedy;
mod kmeans;
mod spectral;
mod stable;
mod walktrap;

pub use fast_greedy::fast_greedy;
pub use kmeans::{kmeans, KMeansFit};
pub use spectral::{spectral_partition, SpectralOptions};
pub use stable::{
    inter_group_edges, remove_and_partition, stable_communities, CommunityOptions, Group,
    GroupKind, RemovalAnalysis, SummaryGraph,
};
pub use walktrap::{walktrap, DEFAULT_WALK_LENGTH};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    FastGreedy,
    Spectral,
    Walktrap,
    Given,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::FastGreedy => "fast_greedy",
            Method::Spectral => "spectral",
            Method::Walktrap => "walktrap",
            Method::Given => "given",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s.trim() {
            "fg" | "fast_greedy" | "fastgreedy" => Some(Method::FastGreedy),
            "spectral" => Some(Method::Spectral),
            "walktrap" | "wt" => Some(Method::Walktrap),
            _ => None,
        }
    }
}

/// Disjoint covering vertex classes, identified by label.
///
/// Classes are ordered by size (descending) then smallest label; members
/// within a class are sorted by label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Partition {
    pub method: Method,
    pub classes: Vec<Vec<String>>,
    pub modularity: f64,
}

impl Partition {
    /// Builds a canonical partition from a per-vertex class assignment.
    pub fn from_membership(g: &Graph, membership: &[usize], method: Method) -> Result<Partition> {
        let classes = classes_from_membership(membership);
        let modularity = modularity_of_classes(g, &classes)?;
        Ok(Partition {
            method,
            classes: canonical_label_classes(g, &classes),
            modularity,
        })
    }

    pub fn from_labels<S: AsRef<str>>(g: &Graph, classes: &[Vec<S>]) -> Result<Partition> {
        let ids = classes
            .iter()
            .map(|c| g.resolve(c))
            .collect::<Result<Vec<_>>>()?;
        let modularity = modularity_of_classes(g, &ids)?;
        Ok(Partition {
            method: Method::Given,
            classes: canonical_label_classes(g, &ids),
            modularity,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class ids (`0..k`) per vertex of `g`.
    pub fn membership(&self, g: &Graph) -> Result<Vec<usize>> {
        let mut m = vec![usize::MAX; g.vertex_count()];
        for (c, class) in self.classes.iter().enumerate() {
            for v in g.resolve(class)? {
                m[v] = c;
            }
        }
        if m.contains(&usize::MAX) {
            return Err(Error::InvalidPartition("partition does not cover the graph".into()));
        }
        Ok(m)
    }
}

pub(crate) fn classes_from_membership(membership: &[usize]) -> Vec<Vec<VertexId>> {
    let mut by_id: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
    for (v, &c) in membership.iter().enumerate() {
        by_id.entry(c).or_default().push(v);
    }
    by_id.into_values().collect()
}

fn canonical_label_classes(g: &Graph, classes: &[Vec<VertexId>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = classes
        .iter()
        .map(|c| {
            let mut labels: Vec<String> = c.iter().map(|&v| g.label(v).to_owned()).collect();
            labels.sort();
            labels
        })
        .collect();
    sort_label_sets(&mut out);
    out
}

/// Size descending, then smallest label.
pub(crate) fn sort_label_sets(sets: &mut [Vec<String>]) {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.first().cmp(&b.first())));
}

/// Exact `M · 4m²` for a validated class list.
pub(crate) fn modularity_numerator(g: &Graph, membership: &[usize], classes: usize) -> i128 {
    let m = g.edge_count() as i128;
    let mut internal = vec![0i128; classes];
    let mut degree = vec![0i128; classes];
    for v in g.vertices() {
        degree[membership[v]] += g.degree(v) as i128;
    }
    for (u, v) in g.edges() {
        if membership[u] == membership[v] {
            internal[membership[u]] += 1;
        }
    }
    internal
        .iter()
        .zip(&degree)
        .map(|(&mi, &di)| 4 * m * mi - di * di)
        .sum()
}

pub(crate) fn numerator_to_modularity(num: i128, m: usize) -> f64 {
    let m = m as f64;
    num as f64 / (4.0 * m * m)
}

fn validate_classes(g: &Graph, classes: &[Vec<VertexId>]) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let mut membership = vec![usize::MAX; n];
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::InvalidPartition(format!("class {c} is empty")));
        }
        for &v in class {
            if v >= n {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            if membership[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "vertex `{}` appears in two classes",
                    g.label(v)
                )));
            }
            membership[v] = c;
        }
    }
    if let Some(v) = membership.iter().position(|&c| c == usize::MAX) {
        return Err(Error::InvalidPartition(format!(
            "vertex `{}` is not covered",
            g.label(v)
        )));
    }
    Ok(membership)
}

/// Modularity of vertex-id classes.
pub fn modularity_of_classes(g: &Graph, classes: &[Vec<VertexId>]) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::Undefined("modularity needs at least one edge".into()));
    }
    let membership = validate_classes(g, classes)?;
    Ok(numerator_to_modularity(
        modularity_numerator(g, &membership, classes.len()),
        g.edge_count(),
    ))
}

/// Modularity of a label partition on `g`.
pub fn modularity(g: &Graph, partition: &Partition) -> Result<f64> {
    let ids = partition
        .classes
        .iter()
        .map(|c| g.resolve(c))
        .collect::<Result<Vec<_>>>()?;
    modularity_of_classes(g, &ids)
}

/// One agglomeration step. Leaves are ids `0..n`; merge `i` creates id `n + i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub a: usize,
    pub b: usize,
    /// Criterion value at the merge (modularity gain or walktrap Δσ).
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dendrogram {
    pub leaves: Vec<String>,
    pub merges: Vec<Merge>,
    /// Modularity of level `l` (after `l` merges); level 0 is all singletons.
    pub modularity: Vec<f64>,
    /// Level returned as the partition (first level of maximal modularity).
    pub cut_level: usize,
}

impl Dendrogram {
    pub fn levels(&self) -> usize {
        self.merges.len() + 1
    }

    /// Per-leaf class assignment after `level` merges (class ids are cluster ids).
    pub fn membership_at(&self, level: usize) -> Vec<usize> {
        let n = self.leaves.len();
        let mut parent: Vec<usize> = (0..n + level).collect();
        for (i, mg) in self.merges[..level].iter().enumerate() {
            parent[mg.a] = n + i;
            parent[mg.b] = n + i;
        }
        (0..n)
            .map(|mut x| {
                while parent[x] != x {
                    x = parent[x];
                }
                x
            })
            .collect()
    }

    pub fn partition_at(&self, g: &Graph, level: usize, method: Method) -> Result<Partition> {
        Partition::from_membership(g, &self.membership_at(level), method)
    }
}

/// Per-level exact modularity numerators, and the first level attaining the maximum.
pub(crate) fn best_level(numerators: &[i128]) -> usize {
    let best = numerators.iter().copied().max().unwrap_or(0);
    numerators.iter().position(|&x| x == best).unwrap_or(0)
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    /// Modularity by direct edge counting, independent of the integer route.
    pub fn brute_modularity(g: &Graph, membership: &[usize]) -> f64 {
        let m = g.edge_count() as f64;
        let k = membership.iter().max().map_or(0, |&x| x + 1);
        let mut total = 0.0;
        for c in 0..k {
            let mut inside = 0.0;
            let mut deg = 0.0;
            for u in g.vertices() {
                if membership[u] != c {
                    continue;
                }
                deg += g.degree(u) as f64;
                for v in u + 1..g.vertex_count() {
                    if membership[v] == c && g.has_edge(u, v) {
                        inside += 1.0;
                    }
                }
            }
            total += inside / m - (deg / (2.0 * m)).powi(2);
        }
        total
    }

    /// All set partitions of `0..n` as restricted-growth strings.
    pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            for c in 0..=max + 1 {
                cur.push(c);
                rec(i + 1, n, cur, max.max(c), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut cur = vec![0];
        rec(1, n, &mut cur, 0, &mut out);
        out
    }

    pub fn exhaustive_max(g: &Graph) -> f64 {
        all_partitions(g.vertex_count())
            .iter()
            .map(|p| brute_modularity(g, p))
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
