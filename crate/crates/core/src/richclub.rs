//! Degree-ordered density profiles and rich-club detection.
//!
//! `φ(r)` is the density of the subgraph induced by the `r` vertices of
//! highest degree (ties broken by ascending label). A rich club is the
//! longest prefix whose density stays above a threshold `τ`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::metrics::{all_pairs_distances, centralities, density_from_counts};

pub const DEFAULT_TAU: f64 = 0.95;
pub const DEFAULT_RMIN: usize = 3;

/// Vertices by non-increasing degree, ties by ascending label.
pub fn degree_order(g: &Graph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by(|&a, &b| {
        g.degree(b)
            .cmp(&g.degree(a))
            .then_with(|| g.label(a).cmp(g.label(b)))
    });
    order
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankEntry {
    pub rank: usize,
    pub label: String,
    pub degree: usize,
    /// Edges inside the top-`rank` prefix.
    pub internal_edges: usize,
    pub phi: f64,
    /// Diameter of the prefix's largest component.
    pub diameter: u32,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RichClubProfile {
    pub entries: Vec<RankEntry>,
}

impl RichClubProfile {
    pub fn phi(&self, r: usize) -> Option<f64> {
        self.entries.get(r.checked_sub(1)?).map(|e| e.phi)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("r,label,degree,phi,diam,connected\n");
        for e in &self.entries {
            s.push_str(&format!(
                "{},{},{},{},{},{}\n",
                e.rank, e.label, e.degree, e.phi, e.diameter, e.connected
            ));
        }
        s
    }
}

fn prefix_diameter(g: &Graph, prefix: &[VertexId]) -> Result<(u32, bool)> {
    let sub = g.induced_subgraph(prefix)?;
    let comps = sub.connected_components();
    let dist = &all_pairs_distances(&sub);
    let largest = &comps[0];
    let diam = largest
        .iter()
        .flat_map(|&u| largest.iter().filter_map(move |&v| dist.get(u, v)))
        .max()
        .unwrap_or(0);
    Ok((diam, comps.len() == 1))
}

pub fn rich_club_profile(g: &Graph) -> Result<RichClubProfile> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Undefined(format!(
            "rich-club profile needs n >= 2, got {n}"
        )));
    }
    let order = degree_order(g);
    let mut position = vec![usize::MAX; n];
    let mut internal = Vec::with_capacity(n);
    let mut edges = 0;
    for (i, &v) in order.iter().enumerate() {
        edges += g
            .neighbors(v)
            .iter()
            .filter(|&&w| position[w] != usize::MAX)
            .count();
        position[v] = i;
        internal.push(edges);
    }
    let diameters: Vec<(u32, bool)> = (1..=n)
        .into_par_iter()
        .map(|r| prefix_diameter(g, &order[..r]))
        .collect::<Result<_>>()?;
    let entries = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let r = i + 1;
            RankEntry {
                rank: r,
                label: g.label(v).to_owned(),
                degree: g.degree(v),
                internal_edges: internal[i],
                phi: if r == 1 {
                    1.0
                } else {
                    density_from_counts(r, internal[i])
                },
                diameter: diameters[i].0,
                connected: diameters[i].1,
            }
        })
        .collect();
    Ok(RichClubProfile { entries })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RichClubResult {
    pub members: Vec<String>,
    pub size: usize,
    pub internal_density: f64,
    pub missing_edges: usize,
    pub tau: f64,
    pub rmin: usize,
    /// Density after adding the next-ranked vertex, if any.
    pub next_phi: Option<f64>,
    pub diameter: u32,
    pub next_diameter: Option<u32>,
}

/// Largest prefix `r >= rmin` with `φ(r) >= tau`, or `None`.
pub fn detect_rich_club(
    profile: &RichClubProfile,
    tau: f64,
    rmin: usize,
) -> Result<Option<RichClubResult>> {
    if !(tau > 0.0) {
        return Err(Error::InvalidParameter(format!("tau must be > 0, got {tau}")));
    }
    if rmin < 2 {
        return Err(Error::InvalidParameter(format!("rmin must be >= 2, got {rmin}")));
    }
    let hit = profile
        .entries
        .iter()
        .rev()
        .find(|e| e.rank >= rmin && e.phi >= tau);
    Ok(hit.map(|e| {
        let r = e.rank;
        let next = profile.entries.get(r);
        RichClubResult {
            members: profile.entries[..r].iter().map(|e| e.label.clone()).collect(),
            size: r,
            internal_density: e.phi,
            missing_edges: r * (r - 1) / 2 - e.internal_edges,
            tau,
            rmin,
            next_phi: next.map(|x| x.phi),
            diameter: e.diameter,
            next_diameter: next.map(|x| x.diameter),
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityRow {
    pub rank: usize,
    pub label: String,
    pub degree: usize,
    pub betweenness: f64,
    pub closeness: f64,
}

/// Betweenness and closeness of every vertex, listed in degree order.
pub fn centrality_by_degree_report(g: &Graph) -> Result<Vec<CentralityRow>> {
    let c = centralities(g)?;
    Ok(degree_order(g)
        .into_iter()
        .enumerate()
        .map(|(i, v)| CentralityRow {
            rank: i + 1,
            label: g.label(v).to_owned(),
            degree: g.degree(v),
            betweenness: c.betweenness[v],
            closeness: c.closeness[v],
        })
        .collect())
}

pub fn centrality_rows_to_csv(rows: &[CentralityRow]) -> String {
    let mut s = String::from("rank,label,degree,betweenness,closeness\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.rank, r.label, r.degree, r.betweenness, r.closeness
        ));
    }
    s
}
