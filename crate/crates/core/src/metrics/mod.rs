//! Structural indices: density, path lengths, clustering, centralities and
//! the aggregated summary row.

mod centrality;
mod clustering;
mod paths;

pub use centrality::{
    betweenness, centralities, centralization, centralization_with, closeness, BetweennessNorm, degree_centrality, CentralityKind,
    CentralityScores,
};
pub use clustering::{
    clustering, connected_triples, local_triangles, mean_local_clustering, transitivity,
    triangle_count, Clustering,
};
pub use paths::{all_pairs_distances, path_metrics, DistanceTable, PathMeanConvention, PathMetrics};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `2m / (n(n-1))`.
pub fn density(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Undefined(format!("density needs n >= 2, got {n}")));
    }
    Ok(density_from_counts(n, g.edge_count()))
}

pub fn density_from_counts(n: usize, m: usize) -> f64 {
    2.0 * m as f64 / (n as f64 * (n as f64 - 1.0))
}

pub fn mean_degree_from_counts(n: usize, m: usize) -> f64 {
    2.0 * m as f64 / n as f64
}

/// Which vertices the summary indices were computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Global indices on the whole graph; path metrics and closeness
    /// centralization on the largest component.
    #[default]
    WholeGraph,
    /// Every index on the largest connected component only.
    LargestComponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SummaryOptions {
    pub scope: Scope,
    pub path_mean: PathMeanConvention,
    pub betweenness_norm: BetweennessNorm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPolicy {
    pub scope: Scope,
    pub path_mean: PathMeanConvention,
    pub betweenness_norm: BetweennessNorm,
    pub components: usize,
    pub input_vertices: usize,
    /// Size of the largest component, on which path metrics and closeness
    /// centralization are computed.
    pub largest_component: usize,
}

/// One row of structural indices. Indices that are undefined for the input
/// (too few vertices, no connected triple, ...) are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StructuralIndices {
    pub n: usize,
    pub m: usize,
    #[serde(rename = "d")]
    pub density: Option<f64>,
    #[serde(rename = "k")]
    pub mean_degree: Option<f64>,
    #[serde(rename = "lbar")]
    pub mean_path_length: Option<f64>,
    #[serde(rename = "L")]
    pub characteristic_path_length: Option<f64>,
    #[serde(rename = "D")]
    pub diameter: Option<u32>,
    #[serde(rename = "C1")]
    pub c1: Option<f64>,
    #[serde(rename = "C2")]
    pub c2: Option<f64>,
    #[serde(rename = "C_D")]
    pub degree_centralization: Option<f64>,
    #[serde(rename = "C_B")]
    pub betweenness_centralization: Option<f64>,
    #[serde(rename = "C_P")]
    pub closeness_centralization: Option<f64>,
    pub component_policy: ComponentPolicy,
}

/// Index names in table order.
pub const INDEX_NAMES: [&str; 12] = [
    "n", "m", "d", "k", "lbar", "L", "D", "C1", "C2", "C_D", "C_B", "C_P",
];

impl StructuralIndices {
    /// Values in [`INDEX_NAMES`] order.
    pub fn values(&self) -> [Option<f64>; 12] {
        [
            Some(self.n as f64),
            Some(self.m as f64),
            self.density,
            self.mean_degree,
            self.mean_path_length,
            self.characteristic_path_length,
            self.diameter.map(f64::from),
            self.c1,
            self.c2,
            self.degree_centralization,
            self.betweenness_centralization,
            self.closeness_centralization,
        ]
    }
}

fn defined<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Undefined(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn structural_summary(g: &Graph, opts: SummaryOptions) -> Result<StructuralIndices> {
    let comps = g.connected_components();
    let largest = comps.first().cloned().unwrap_or_default();
    let lcc_graph = if largest.len() == g.vertex_count() {
        None
    } else {
        Some(g.induced_subgraph(&largest)?)
    };
    let lcc = lcc_graph.as_ref().unwrap_or(g);
    let target = match opts.scope {
        Scope::WholeGraph => g,
        Scope::LargestComponent => lcc,
    };
    let n = target.vertex_count();
    let m = target.edge_count();
    let paths = defined(path_metrics(lcc, opts.path_mean))?;
    Ok(StructuralIndices {
        n,
        m,
        density: defined(density(target))?,
        mean_degree: (n > 0).then(|| mean_degree_from_counts(n, m)),
        mean_path_length: paths.map(|p| p.mean_path_length),
        characteristic_path_length: paths.map(|p| p.characteristic_path_length),
        diameter: paths.map(|p| p.diameter),
        c1: defined(mean_local_clustering(target))?,
        c2: defined(transitivity(target))?,
        degree_centralization: defined(centralization(target, CentralityKind::Degree))?,
        betweenness_centralization: defined(centralization_with(
            target,
            CentralityKind::Betweenness,
            opts.betweenness_norm,
        ))?,
        closeness_centralization: defined(centralization(lcc, CentralityKind::Closeness))?,
        component_policy: ComponentPolicy {
            scope: opts.scope,
            path_mean: opts.path_mean,
            betweenness_norm: opts.betweenness_norm,
            components: comps.len(),
            input_vertices: g.vertex_count(),
            largest_component: largest.len(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, empty, path};

    #[test]
    fn density_cases() {
        assert!((density_from_counts(51, 531) - 0.416_470_588).abs() < 1e-9);
        assert_eq!(density(&complete(6)).unwrap(), 1.0);
        assert_eq!(density(&empty(6)).unwrap(), 0.0);
        assert!(density(&empty(1)).is_err());
        assert!((mean_degree_from_counts(51, 531) - 20.823_529).abs() < 1e-6);
    }

    #[test]
    fn summary_of_k4() {
        let opts = SummaryOptions {
            path_mean: PathMeanConvention::ExcludeSelf,
            ..Default::default()
        };
        let s = structural_summary(&complete(4), opts).unwrap();
        assert_eq!((s.n, s.m), (4, 6));
        assert_eq!(s.density, Some(1.0));
        assert_eq!(s.mean_degree, Some(3.0));
        assert_eq!(s.mean_path_length, Some(1.0));
        assert_eq!(s.characteristic_path_length, Some(1.0));
        assert_eq!(s.diameter, Some(1));
        assert_eq!((s.c1, s.c2), (Some(1.0), Some(1.0)));
        assert_eq!(s.degree_centralization, Some(0.0));
        assert_eq!(s.betweenness_centralization, Some(0.0));
        assert_eq!(s.closeness_centralization, Some(0.0));
    }

    #[test]
    fn summary_of_path_composes_operations() {
        let opts = SummaryOptions {
            path_mean: PathMeanConvention::ExcludeSelf,
            ..Default::default()
        };
        let s = structural_summary(&path(3), opts).unwrap();
        assert!((s.mean_path_length.unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert_eq!(s.characteristic_path_length, Some(1.5));
        assert_eq!(s.diameter, Some(2));
        assert_eq!((s.c1, s.c2), (Some(0.0), Some(0.0)));
        // path on 3 vertices is the star with 2 leaves
        for c in [s.degree_centralization, s.closeness_centralization] {
            assert!((c.unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((s.betweenness_centralization.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn scope_largest_component() {
        let g = Graph::from_edges(&["a", "b", "c", "z"], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let whole = structural_summary(&g, SummaryOptions::default()).unwrap();
        assert_eq!(whole.n, 4);
        assert_eq!(whole.density, Some(0.5));
        let lcc = structural_summary(
            &g,
            SummaryOptions {
                scope: Scope::LargestComponent,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(lcc.n, 3);
        assert_eq!(lcc.density, Some(1.0));
        assert_eq!(lcc.component_policy.components, 2);
    }

    #[test]
    fn undefined_indices_are_none() {
        let s = structural_summary(&empty(2), SummaryOptions::default()).unwrap();
        assert_eq!(s.density, Some(0.0));
        assert_eq!(s.mean_path_length, None);
        assert_eq!(s.c2, None);
        assert_eq!(s.degree_centralization, None);
    }
}
