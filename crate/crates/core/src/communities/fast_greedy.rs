//! Greedy agglomerative modularity optimization.
//!
//! Starting from singletons, repeatedly merges the pair of classes with the
//! largest modularity gain `ΔM = (2m·e_ij − D_i·D_j) / 2m²`, where `e_ij`
//! counts edges between the classes. Pairs without edges (gain ≤ 0) are
//! still eligible so the merge sequence always ends in a single class.
//! Ties go to the lexicographically smallest pair of class keys (a class is
//! keyed by its smallest label).

use super::{best_level, numerator_to_modularity, Dendrogram, Merge, Method, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct Class {
    id: usize,
    key: String,
    degree: i128,
}

pub fn fast_greedy(g: &Graph) -> Result<(Partition, Dendrogram)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Undefined("fast-greedy needs at least one edge".into()));
    }
    let two_m = 2 * m as i128;
    let mut classes: Vec<Option<Class>> = g
        .vertices()
        .map(|v| {
            Some(Class {
                id: v,
                key: g.label(v).to_owned(),
                degree: g.degree(v) as i128,
            })
        })
        .collect();
    // edges between live class slots
    let mut between = vec![vec![0i128; n]; n];
    for (u, v) in g.edges() {
        between[u][v] += 1;
        between[v][u] += 1;
    }
    let mut numerator: i128 = -classes
        .iter()
        .flatten()
        .map(|c| c.degree * c.degree)
        .sum::<i128>();
    let mut numerators = vec![numerator];
    let mut merges = Vec::with_capacity(n.saturating_sub(1));

    for step in 0..n.saturating_sub(1) {
        let mut best: Option<(i128, (&str, &str), usize, usize)> = None;
        for i in 0..n {
            let Some(ci) = &classes[i] else { continue };
            for j in i + 1..n {
                let Some(cj) = &classes[j] else { continue };
                let gain = two_m * between[i][j] - ci.degree * cj.degree;
                let key = if ci.key < cj.key {
                    (ci.key.as_str(), cj.key.as_str())
                } else {
                    (cj.key.as_str(), ci.key.as_str())
                };
                let better = match &best {
                    None => true,
                    Some((bg, bk, _, _)) => gain > *bg || (gain == *bg && key < *bk),
                };
                if better {
                    best = Some((gain, key, i, j));
                }
            }
        }
        let (gain, _, i, j) = best.expect("at least two live classes");
        let cj = classes[j].take().expect("live");
        let ci = classes[i].as_mut().expect("live");
        merges.push(Merge {
            a: ci.id,
            b: cj.id,
            score: gain as f64 / (two_m * two_m / 2) as f64,
        });
        ci.id = n + step;
        ci.degree += cj.degree;
        if cj.key < ci.key {
            ci.key = cj.key;
        }
        for k in 0..n {
            let add = between[j][k];
            between[i][k] += add;
            between[k][i] += add;
            between[j][k] = 0;
            between[k][j] = 0;
        }
        between[i][i] = 0;
        numerator += 2 * gain;
        numerators.push(numerator);
    }

    let cut = best_level(&numerators);
    let dendrogram = Dendrogram {
        leaves: g.labels().to_vec(),
        merges,
        modularity: numerators
            .iter()
            .map(|&x| numerator_to_modularity(x, m))
            .collect(),
        cut_level: cut,
    };
    let partition = dendrogram.partition_at(g, cut, Method::FastGreedy)?;
    Ok((partition, dendrogram))
}
