//! Deterministic graph families used by fixtures, tests and planted-structure
//! experiments. All vertices are labelled `v0..` with zero padding.

use crate::graph::{Graph, VertexId};
use crate::rng::Stream;

fn numbered(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
    Graph::with_numbered_vertices(n, edges).expect("generator edges are valid")
}

pub fn empty(n: usize) -> Graph {
    numbered(n, &[])
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    numbered(n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    numbered(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 2 {
        edges.push((0, n - 1));
    }
    numbered(n, &edges)
}

/// Star with center `v0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    numbered(leaves + 1, &edges)
}

/// `count` disjoint cliques of `size` vertices; clique `c` holds ids
/// `c*size .. (c+1)*size`.
pub fn disjoint_cliques(count: usize, size: usize) -> Graph {
    numbered(count * size, &clique_edges(count, size))
}

fn clique_edges(count: usize, size: usize) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::new();
    for c in 0..count {
        let base = c * size;
        for u in 0..size {
            for v in u + 1..size {
                edges.push((base + u, base + v));
            }
        }
    }
    edges
}

/// Two cliques of `size` joined by one bridge between `v{size-1}` and `v{size}`.
pub fn two_cliques_bridge(size: usize) -> Graph {
    let mut edges = clique_edges(2, size);
    edges.push((size - 1, size));
    numbered(2 * size, &edges)
}

/// Stochastic block model with equal blocks. Returns the graph and the block of each vertex.
pub fn planted_partition(
    blocks: usize,
    block_size: usize,
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> (Graph, Vec<usize>) {
    let n = blocks * block_size;
    let truth: Vec<usize> = (0..n).map(|v| v / block_size).collect();
    let mut rng = Stream::new(seed, 0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if truth[u] == truth[v] { p_in } else { p_out };
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    (numbered(n, &edges), truth)
}

/// Parameters of a planted rich club: a clique on the first `club` vertices,
/// an Erdős–Rényi periphery with edge probability `p`, and club-to-periphery
/// edges drawn with probability `boost` so club members have the top degrees.
#[derive(Debug, Clone, Copy)]
pub struct PlantedClub {
    pub n: usize,
    pub club: usize,
    pub p: f64,
    pub boost: f64,
}

pub fn planted_rich_club(params: PlantedClub, seed: u64) -> Graph {
    let PlantedClub { n, club, p, boost } = params;
    let mut rng = Stream::new(seed, 0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let keep = match (u < club, v < club) {
                (true, true) => true,
                (true, false) => rng.bernoulli(boost),
                _ => rng.bernoulli(p),
            };
            if keep {
                edges.push((u, v));
            }
        }
    }
    numbered(n, &edges)
}

/// Club of `club` vertices (complete) surrounded by two periphery blocks of
/// `block` vertices. Each block is dense inside (`p_in`), sparse across
/// (`p_out`); block A attaches to the first half of the club and block B to
/// the second half with probability `p_club`, the opposite halves with
/// probability `p_out`. Returns the graph and the periphery block labels
/// (`0`, `1`; club members get `usize::MAX`).
pub fn planted_club_blocks(
    club: usize,
    block: usize,
    p_in: f64,
    p_out: f64,
    p_club: f64,
    seed: u64,
) -> (Graph, Vec<usize>) {
    let n = club + 2 * block;
    let group: Vec<usize> = (0..n)
        .map(|v| if v < club { usize::MAX } else { (v - club) / block })
        .collect();
    let half = club / 2;
    let mut rng = Stream::new(seed, 0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = match (group[u], group[v]) {
                (usize::MAX, usize::MAX) => 1.0,
                (usize::MAX, b) => {
                    let side = usize::from(u >= half);
                    if side == b {
                        p_club
                    } else {
                        p_out
                    }
                }
                (a, b) if a == b => p_in,
                _ => p_out,
            };
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    (numbered(n, &edges), group)
}

/// Club of `club` vertices (even, complete) with two periphery blocks where
/// block B is an exact mirror of block A: the map swapping the blocks and
/// the two club halves is an automorphism. Mean dissimilarity to the club is
/// then identical across the blocks, so block identity is not confounded
/// with distance to the club. Inside A edges appear with probability
/// `p_in`; each A vertex attaches to each first-half club member with
/// probability `p_club`; cross-block edges `a_i b_j` appear together with
/// `a_j b_i`, with probability `p_out`.
pub fn mirrored_club_blocks(
    club: usize,
    block: usize,
    p_in: f64,
    p_out: f64,
    p_club: f64,
    seed: u64,
) -> (Graph, Vec<usize>) {
    assert!(club.is_multiple_of(2), "club size must be even");
    let n = club + 2 * block;
    let half = club / 2;
    let a = |i: usize| club + i;
    let b = |i: usize| club + block + i;
    let group: Vec<usize> = (0..n)
        .map(|v| if v < club { usize::MAX } else { (v - club) / block })
        .collect();
    let mut rng = Stream::new(seed, 0);
    let mut edges = Vec::new();
    for u in 0..club {
        for v in u + 1..club {
            edges.push((u, v));
        }
    }
    for i in 0..block {
        for k in 0..half {
            if rng.bernoulli(p_club) {
                edges.push((k, a(i)));
                edges.push((half + k, b(i)));
            }
        }
        for j in i + 1..block {
            if rng.bernoulli(p_in) {
                edges.push((a(i), a(j)));
                edges.push((b(i), b(j)));
            }
        }
        for j in i..block {
            if rng.bernoulli(p_out) {
                edges.push((a(i), b(j)));
                if i != j {
                    edges.push((a(j), b(i)));
                }
            }
        }
    }
    (numbered(n, &edges), group)
}
