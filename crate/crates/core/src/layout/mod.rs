//! Hemicycle layout: each non-club vertex is placed in the upper unit
//! half-disk with a radius driven by its mean Czekanovski–Dice dissimilarity
//! to the rich club and an angle taken from the first principal component of
//! the dissimilarity embedding once that mean distance has been projected
//! out. The club sits at the origin.

mod dissimilarity;
mod mds;

pub use dissimilarity::{
    czekanovski_dice, czekanovski_dice_on, mean_distance_to_club, radial_coords, ClubMean,
    DissimilarityMatrix, Neighborhood,
};
pub use mds::{
    angular_coords, correlation, gram_from_distances, principal_components,
    principal_coordinates, project_out_variable, Embedding, GramMatrix, Projection,
    DEFAULT_TOL_FACTOR,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HemicycleOptions {
    pub neighborhood: Neighborhood,
    pub club_mean: ClubMean,
    /// Eigenvalue cutoff relative to the largest eigenvalue.
    pub tol_factor: f64,
}

impl Default for HemicycleOptions {
    fn default() -> Self {
        Self {
            neighborhood: Neighborhood::Open,
            club_mean: ClubMean::Delta,
            tol_factor: DEFAULT_TOL_FACTOR,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HemicyclePoint {
    pub label: String,
    pub dbar: f64,
    pub r: f64,
    pub theta: f64,
}

impl HemicyclePoint {
    pub fn cartesian(&self) -> (f64, f64) {
        (self.r * self.theta.cos(), self.r * self.theta.sin())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HemicycleLayout {
    /// Pinned at the origin.
    pub club: Vec<String>,
    /// Non-club vertices in graph order.
    pub points: Vec<HemicyclePoint>,
    /// Isolated vertices left out of the layout.
    pub skipped: Vec<String>,
    /// Signed correlation between the first principal component before the
    /// projection and the mean distance to the club.
    pub diagnostic_correlation: Option<f64>,
    pub dimensions: usize,
    pub options: HemicycleOptions,
}

pub fn hemicycle_layout<S: AsRef<str>>(
    g: &Graph,
    club: &[S],
    opts: &HemicycleOptions,
) -> Result<HemicycleLayout> {
    let club_ids = g.resolve(club)?;
    if club_ids.is_empty() {
        return Err(Error::InvalidParameter("club is empty".into()));
    }
    if let Some(&v) = club_ids.iter().find(|&&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(g.label(v).to_owned()));
    }
    let mut in_club = vec![false; g.vertex_count()];
    for &v in &club_ids {
        in_club[v] = true;
    }
    let skipped: Vec<String> = g
        .vertices()
        .filter(|&v| g.degree(v) == 0)
        .map(|v| g.label(v).to_owned())
        .collect();
    let used: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let club_rows: Vec<usize> = (0..used.len()).filter(|&i| in_club[used[i]]).collect();
    if club_rows.len() == used.len() {
        return Err(Error::InvalidParameter(
            "club must be a proper subset of the non-isolated vertices".into(),
        ));
    }

    let dm = czekanovski_dice_on(g, &used, opts.neighborhood)?;
    let means = mean_distance_to_club(&dm, &club_rows, opts.club_mean)?;
    let rows: Vec<usize> = means.iter().map(|&(i, _)| i).collect();
    let dbar: Vec<f64> = means.iter().map(|&(_, d)| d).collect();
    let r = radial_coords(&dbar)?;

    let periphery = dm.restrict(&rows);
    let gram = gram_from_distances(&periphery)?;
    let lmax = gram.values.first().copied().unwrap_or(0.0).max(0.0);
    let emb = principal_coordinates(&gram, Some(opts.tol_factor * lmax))?;
    let diagnostic_correlation = if emb.dimensions() > 0 {
        correlation(&emb.component(0), &dbar)
    } else {
        None
    };
    let proj = project_out_variable(&emb, &dbar)?;
    let pcs = principal_components(&proj.y, emb.tol)?;
    let c1 = pcs.first().ok_or_else(|| {
        Error::Degenerate("no variance left after projecting out the club distance".into())
    })?;
    let theta = angular_coords(c1)?;

    let points = rows
        .iter()
        .enumerate()
        .map(|(k, &row)| HemicyclePoint {
            label: dm.labels()[row].clone(),
            dbar: dbar[k],
            r: r[k],
            theta: theta[k],
        })
        .collect();
    let mut club_labels: Vec<String> = club_ids.iter().map(|&v| g.label(v).to_owned()).collect();
    club_labels.sort();
    club_labels.dedup();
    Ok(HemicycleLayout {
        club: club_labels,
        points,
        skipped,
        diagnostic_correlation,
        dimensions: emb.dimensions(),
        options: *opts,
    })
}
