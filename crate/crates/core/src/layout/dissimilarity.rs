//! Czekanovski–Dice dissimilarity and the radial coordinate built on it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Neighborhood {
    /// `Γ(v)`, the neighbors of `v`.
    #[default]
    Open,
    /// `Γ(v) ∪ {v}`.
    Closed,
}

/// Symmetric dissimilarities between labelled vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct DissimilarityMatrix {
    labels: Vec<String>,
    values: Vec<f64>,
    /// `true` when entries are `δ²` rather than `δ`.
    squared: bool,
}

impl DissimilarityMatrix {
    /// `values` is row-major `n × n`.
    pub fn new(labels: Vec<String>, values: Vec<f64>, squared: bool) -> Result<Self> {
        let n = labels.len();
        if values.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "expected {} entries for {n} labels, got {}",
                n * n,
                values.len()
            )));
        }
        for i in 0..n {
            if values[i * n + i] != 0.0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at `{}`", labels[i])));
            }
            for j in 0..i {
                if values[i * n + j] != values[j * n + i] {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric entry between `{}` and `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self {
            labels,
            values,
            squared,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_squared(&self) -> bool {
        self.squared
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.len() + j]
    }

    /// Entry as `δ` regardless of storage.
    pub fn delta(&self, i: usize, j: usize) -> f64 {
        let x = self.get(i, j);
        if self.squared {
            x.sqrt()
        } else {
            x
        }
    }

    /// Entry as `δ²` regardless of storage.
    pub fn delta_squared(&self, i: usize, j: usize) -> f64 {
        let x = self.get(i, j);
        if self.squared {
            x
        } else {
            x * x
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Principal submatrix on `rows` (in the given order).
    pub fn restrict(&self, rows: &[usize]) -> DissimilarityMatrix {
        let values = rows
            .iter()
            .flat_map(|&i| rows.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .collect();
        DissimilarityMatrix {
            labels: rows.iter().map(|&i| self.labels[i].clone()).collect(),
            values,
            squared: self.squared,
        }
    }
}

fn sorted_intersection(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// `δ(v,w) = sqrt(|Γv Δ Γw| / (|Γv| + |Γw|))` over `vertices`. Any isolated
/// vertex among them is an error.
pub fn czekanovski_dice_on(
    g: &Graph,
    vertices: &[VertexId],
    neighborhood: Neighborhood,
) -> Result<DissimilarityMatrix> {
    if let Some(&v) = vertices.iter().find(|&&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(g.label(v).to_owned()));
    }
    let sets: Vec<Vec<VertexId>> = vertices
        .iter()
        .map(|&v| {
            let mut s = g.neighbors(v).to_vec();
            if neighborhood == Neighborhood::Closed {
                let at = s.partition_point(|&w| w < v);
                s.insert(at, v);
            }
            s
        })
        .collect();
    let n = vertices.len();
    let values: Vec<f64> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let sets = &sets;
            (0..n).map(move |j| {
                if i == j {
                    return 0.0;
                }
                let total = sets[i].len() + sets[j].len();
                let common = sorted_intersection(&sets[i], &sets[j]);
                ((total - 2 * common) as f64 / total as f64).sqrt()
            })
        })
        .collect();
    DissimilarityMatrix::new(
        vertices.iter().map(|&v| g.label(v).to_owned()).collect(),
        values,
        false,
    )
}

pub fn czekanovski_dice(g: &Graph, neighborhood: Neighborhood) -> Result<DissimilarityMatrix> {
    let all: Vec<VertexId> = g.vertices().collect();
    czekanovski_dice_on(g, &all, neighborhood)
}

/// Which quantity is averaged in the mean distance to the club.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClubMean {
    #[default]
    Delta,
    DeltaSquared,
}

/// Mean dissimilarity of each non-club row to the club rows. Returns
/// `(row, δ̄)` for every row outside `club`, in row order.
pub fn mean_distance_to_club(
    dm: &DissimilarityMatrix,
    club: &[usize],
    mean: ClubMean,
) -> Result<Vec<(usize, f64)>> {
    if club.is_empty() {
        return Err(Error::InvalidParameter("club is empty".into()));
    }
    if let Some(&bad) = club.iter().find(|&&c| c >= dm.len()) {
        return Err(Error::UnknownVertex(format!("#{bad}")));
    }
    let mut in_club = vec![false; dm.len()];
    for &c in club {
        in_club[c] = true;
    }
    let size = in_club.iter().filter(|&&x| x).count() as f64;
    Ok((0..dm.len())
        .filter(|&j| !in_club[j])
        .map(|j| {
            let sum: f64 = (0..dm.len())
                .filter(|&k| in_club[k])
                .map(|k| match mean {
                    ClubMean::Delta => dm.delta(k, j),
                    ClubMean::DeltaSquared => dm.delta_squared(k, j),
                })
                .sum();
            (j, sum / size)
        })
        .collect())
}

/// `r = 0.8·(δ̄ − max) / (max − min) + 1`, so `r ∈ [0.2, 1]`. Evaluated as
/// `0.2 + 0.8·(δ̄ − min)/(max − min)`, which hits both ends exactly.
pub fn radial_coords(dbar: &[f64]) -> Result<Vec<f64>> {
    let (min, max) = min_max(dbar);
    if !(max > min) {
        return Err(Error::Degenerate(
            "all mean distances to the club are equal".into(),
        ));
    }
    Ok(dbar.iter().map(|&d| 0.2 + 0.8 * ((d - min) / (max - min))).collect())
}

pub(crate) fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}
