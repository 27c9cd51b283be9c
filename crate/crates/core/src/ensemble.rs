//! Erdős–Rényi G(n, p) baseline.
//!
//! Sample `i` draws the `n(n-1)/2` vertex pairs in lexicographic order from
//! the ChaCha8 stream `(seed, i)` (see [`crate::rng`]); a pair becomes an
//! edge when its uniform draw is below `p`. Samples are therefore
//! independent of how they are scheduled across threads, and the reduction
//! into means runs in sample order with compensated summation, so the
//! summary is bit-identical for any thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{structural_summary, StructuralIndices, SummaryOptions, INDEX_NAMES};
use crate::rng::Stream;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErParams {
    pub n: usize,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
}

impl ErParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!(
                "p must lie in [0, 1], got {}",
                self.p
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidParameter("samples must be >= 1".into()));
        }
        Ok(())
    }
}

pub fn sample_er(params: &ErParams, index: u64) -> Graph {
    let n = params.n;
    let mut rng = Stream::new(params.seed, index);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(params.p) {
                edges.push((u, v));
            }
        }
    }
    Graph::with_numbered_vertices(n, &edges).expect("sampled edges are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EnsembleOptions {
    pub summary: SummaryOptions,
    /// Average path metrics (lbar, L, D) over connected samples only.
    pub connected_only_paths: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexStats {
    pub name: String,
    pub mean: Option<f64>,
    /// Sample standard deviation (denominator `count - 1`); 0 for a single value.
    pub sd: Option<f64>,
    /// Samples on which the index was defined and included.
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSummary {
    pub params: ErParams,
    pub options: EnsembleOptions,
    pub indices: Vec<IndexStats>,
    pub disconnected_samples: usize,
}

impl EnsembleSummary {
    pub fn get(&self, name: &str) -> Option<&IndexStats> {
        self.indices.iter().find(|s| s.name == name)
    }

    pub fn mean(&self, name: &str) -> Option<f64> {
        self.get(name).and_then(|s| s.mean)
    }
}

/// Neumaier-compensated sum in slice order.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

fn stats(name: &str, values: &[f64]) -> IndexStats {
    let count = values.len();
    if count == 0 {
        return IndexStats {
            name: name.to_owned(),
            mean: None,
            sd: None,
            count,
        };
    }
    let first = values[0];
    if values.iter().all(|&x| x == first) {
        return IndexStats {
            name: name.to_owned(),
            mean: Some(first),
            sd: Some(0.0),
            count,
        };
    }
    let mean = compensated_sum(values.iter().copied()) / count as f64;
    let sd = if count > 1 {
        let ss = compensated_sum(values.iter().map(|&x| (x - mean) * (x - mean)));
        (ss / (count - 1) as f64).sqrt()
    } else {
        0.0
    };
    IndexStats {
        name: name.to_owned(),
        mean: Some(mean),
        sd: Some(sd),
        count,
    }
}

const PATH_INDICES: [&str; 3] = ["lbar", "L", "D"];

pub fn ensemble_summary(params: &ErParams, opts: EnsembleOptions) -> Result<EnsembleSummary> {
    params.validate()?;
    let rows: Vec<(StructuralIndices, bool)> = (0..params.samples as u64)
        .into_par_iter()
        .map(|i| {
            let g = sample_er(params, i);
            let connected = g.is_connected();
            structural_summary(&g, opts.summary).map(|s| (s, connected))
        })
        .collect::<Result<_>>()?;
    let disconnected_samples = rows.iter().filter(|(_, c)| !c).count();
    let indices = INDEX_NAMES
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let skip_disconnected = opts.connected_only_paths && PATH_INDICES.contains(&name);
            let values: Vec<f64> = rows
                .iter()
                .filter(|(_, connected)| *connected || !skip_disconnected)
                .filter_map(|(s, _)| s.values()[k])
                .collect();
            stats(name, &values)
        })
        .collect();
    Ok(EnsembleSummary {
        params: *params,
        options: opts,
        indices,
        disconnected_samples,
    })
}
