//! Vertex centralities and Freeman centralization.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::paths::bfs;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityScores {
    /// `deg(v) / (n - 1)`.
    pub degree: Vec<f64>,
    /// Unnormalized pair-fraction sum `Σ_{s<t} σ_st(v) / σ_st`.
    pub betweenness: Vec<f64>,
    /// `(n_c - 1) / Σ_t d(v, t)` within v's component; 0 for isolated vertices.
    pub closeness: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CentralityKind {
    Degree,
    Betweenness,
    Closeness,
}

pub fn degree_centrality(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    if n < 2 {
        return vec![0.0; n];
    }
    g.vertices()
        .map(|v| g.degree(v) as f64 / (n - 1) as f64)
        .collect()
}

/// Brandes' accumulation with exact 128-bit shortest-path counts.
pub fn betweenness(g: &Graph) -> Result<Vec<f64>> {
    let n = g.vertex_count();
    let mut bc = vec![0.0f64; n];
    let mut sigma = vec![0u128; n];
    let mut dist = vec![u32::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    for s in g.vertices() {
        sigma.fill(0);
        dist.fill(u32::MAX);
        delta.fill(0.0);
        order.clear();
        sigma[s] = 1;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] = sigma[w]
                        .checked_add(sigma[v])
                        .ok_or(Error::PathCountOverflow)?;
                }
            }
        }
        for &w in order.iter().rev() {
            let coeff = (1.0 + delta[w]) / sigma[w] as f64;
            for &v in g.neighbors(w) {
                if dist[v] != u32::MAX && dist[v] + 1 == dist[w] {
                    delta[v] += sigma[v] as f64 * coeff;
                }
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // every unordered pair was visited from both endpoints
    for b in &mut bc {
        *b *= 0.5;
    }
    Ok(bc)
}

pub fn closeness(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let mut row = vec![0u32; n];
    let mut queue = VecDeque::with_capacity(n);
    g.vertices()
        .map(|v| {
            bfs(g, v, &mut row, &mut queue);
            let (reached, sum) = row
                .iter()
                .filter(|&&d| d != u32::MAX)
                .fold((0usize, 0u64), |(c, s), &d| (c + 1, s + u64::from(d)));
            if sum == 0 {
                0.0
            } else {
                (reached - 1) as f64 / sum as f64
            }
        })
        .collect()
}

pub fn centralities(g: &Graph) -> Result<CentralityScores> {
    Ok(CentralityScores {
        degree: degree_centrality(g),
        betweenness: betweenness(g)?,
        closeness: closeness(g),
    })
}

/// Scaling of vertex betweenness before Freeman's formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BetweennessNorm {
    /// Divide by the number of ordered pairs `(n-1)(n-2)`; the star scores
    /// 1/2. This is the convention behind the published random-graph
    /// baseline (`C_B ~ 0.006` for G(51, 0.416)).
    #[default]
    OrderedPairs,
    /// Divide by the number of unordered pairs `(n-1)(n-2)/2`; the star scores 1.
    Pairs,
}

fn freeman(scores: &[f64], max_sum: f64) -> f64 {
    let top = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let spread: f64 = scores.iter().map(|&c| top - c).sum();
    spread / max_sum
}

/// Freeman centralization with the default betweenness scaling.
pub fn centralization(g: &Graph, kind: CentralityKind) -> Result<f64> {
    centralization_with(g, kind, BetweennessNorm::default())
}

/// Freeman centralization: spread of the vertex scores around their
/// maximum, divided by the spread of the star graph on `n` vertices.
pub fn centralization_with(g: &Graph, kind: CentralityKind, norm: BetweennessNorm) -> Result<f64> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::Undefined(format!(
            "centralization needs n >= 3, got {n}"
        )));
    }
    let nf = n as f64;
    match kind {
        CentralityKind::Degree => Ok(freeman(&degree_centrality(g), nf - 2.0)),
        CentralityKind::Betweenness => {
            let pairs = (nf - 1.0) * (nf - 2.0) / 2.0;
            let scores: Vec<f64> = betweenness(g)?.into_iter().map(|b| b / pairs).collect();
            let star = freeman(&scores, nf - 1.0);
            Ok(match norm {
                BetweennessNorm::Pairs => star,
                BetweennessNorm::OrderedPairs => 0.5 * star,
            })
        }
        CentralityKind::Closeness => {
            if !g.is_connected() {
                return Err(Error::Undefined(
                    "closeness centralization needs a connected graph".into(),
                ));
            }
            let max_sum = (nf - 1.0) * (nf - 2.0) / (2.0 * nf - 3.0);
            Ok(freeman(&closeness(g), max_sum))
        }
    }
}
