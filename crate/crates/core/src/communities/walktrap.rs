//! Pons–Latapy random-walk clustering.
//!
//! Every vertex gets a self-loop, so the walk matrix is `P = D'^{-1}A'` with
//! `d'(v) = d(v) + 1`. A vertex is represented by `x_v = D'^{-1/2} P^t_v·`
//! and a community by the size-weighted mean of its members. Adjacent
//! communities are merged by Ward's criterion
//! `Δσ = (1/n)·|C1||C2|/(|C1|+|C2|)·‖x_C1 − x_C2‖²`; once no two communities
//! touch, the remaining ones are merged by the same criterion so the
//! dendrogram ends in a single class.

use nalgebra::DMatrix;

use super::{best_level, numerator_to_modularity, Dendrogram, Merge, Method, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_WALK_LENGTH: usize = 4;

struct Community {
    id: usize,
    key: String,
    size: usize,
    degree: i128,
    x: Vec<f64>,
}

fn walk_vectors(g: &Graph, t: usize) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut p = DMatrix::<f64>::zeros(n, n);
    for v in g.vertices() {
        let d = (g.degree(v) + 1) as f64;
        p[(v, v)] = 1.0 / d;
        for &w in g.neighbors(v) {
            p[(v, w)] = 1.0 / d;
        }
    }
    let mut pt = p.clone();
    for _ in 1..t {
        pt = &pt * &p;
    }
    let scale: Vec<f64> = g
        .vertices()
        .map(|v| 1.0 / ((g.degree(v) + 1) as f64).sqrt())
        .collect();
    (0..n)
        .map(|i| (0..n).map(|k| pt[(i, k)] * scale[k]).collect())
        .collect()
}

fn ward(a: &Community, b: &Community, n: usize) -> f64 {
    let r2: f64 = a.x.iter().zip(&b.x).map(|(x, y)| (x - y) * (x - y)).sum();
    let (sa, sb) = (a.size as f64, b.size as f64);
    sa * sb / (sa + sb) * r2 / n as f64
}

pub fn walktrap(g: &Graph, t: usize) -> Result<(Partition, Dendrogram)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::Undefined("walktrap needs at least one edge".into()));
    }
    if t == 0 {
        return Err(Error::InvalidParameter("walk length must be >= 1".into()));
    }
    let two_m = 2 * m as i128;
    let mut comms: Vec<Option<Community>> = walk_vectors(g, t)
        .into_iter()
        .enumerate()
        .map(|(v, x)| {
            Some(Community {
                id: v,
                key: g.label(v).to_owned(),
                size: 1,
                degree: g.degree(v) as i128,
                x,
            })
        })
        .collect();
    let mut between = vec![vec![0i128; n]; n];
    for (u, v) in g.edges() {
        between[u][v] += 1;
        between[v][u] += 1;
    }
    let mut sigma = vec![vec![f64::INFINITY; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = ward(comms[i].as_ref().unwrap(), comms[j].as_ref().unwrap(), n);
            sigma[i][j] = s;
            sigma[j][i] = s;
        }
    }
    let mut numerator: i128 = -g
        .vertices()
        .map(|v| (g.degree(v) as i128).pow(2))
        .sum::<i128>();
    let mut numerators = vec![numerator];
    let mut merges = Vec::with_capacity(n.saturating_sub(1));

    for step in 0..n.saturating_sub(1) {
        // adjacency first, then Δσ, then the smallest key pair
        let mut best: Option<(bool, f64, (&str, &str), usize, usize)> = None;
        for i in 0..n {
            let Some(ci) = &comms[i] else { continue };
            for j in i + 1..n {
                let Some(cj) = &comms[j] else { continue };
                let adjacent = between[i][j] > 0;
                let s = sigma[i][j];
                let key = if ci.key < cj.key {
                    (ci.key.as_str(), cj.key.as_str())
                } else {
                    (cj.key.as_str(), ci.key.as_str())
                };
                let better = match &best {
                    None => true,
                    Some((ba, bs, bk, _, _)) => {
                        (adjacent && !ba)
                            || (adjacent == *ba && (s < *bs || (s == *bs && key < *bk)))
                    }
                };
                if better {
                    best = Some((adjacent, s, key, i, j));
                }
            }
        }
        let (_, score, _, i, j) = best.expect("at least two live communities");
        let cj = comms[j].take().expect("live");
        let ci = comms[i].as_mut().expect("live");
        merges.push(Merge {
            a: ci.id,
            b: cj.id,
            score,
        });
        numerator += 2 * (two_m * between[i][j] - ci.degree * cj.degree);
        numerators.push(numerator);
        let total = (ci.size + cj.size) as f64;
        for (x, y) in ci.x.iter_mut().zip(&cj.x) {
            *x = (*x * ci.size as f64 + y * cj.size as f64) / total;
        }
        ci.id = n + step;
        ci.size += cj.size;
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
            sigma[j][k] = f64::INFINITY;
            sigma[k][j] = f64::INFINITY;
        }
        between[i][i] = 0;
        let ci = comms[i].as_ref().expect("live");
        for k in 0..n {
            if k == i {
                continue;
            }
            if let Some(ck) = &comms[k] {
                let s = ward(ci, ck, n);
                sigma[i][k] = s;
                sigma[k][i] = s;
            }
        }
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
    let partition = dendrogram.partition_at(g, cut, Method::Walktrap)?;
    Ok((partition, dendrogram))
}
