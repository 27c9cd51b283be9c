//! Stable communities (the meet of several partitions) and the analysis of a
//! graph with a vertex set, typically the rich club, removed.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    fast_greedy, sort_label_sets, spectral_partition, walktrap, Method, Partition,
    SpectralOptions, DEFAULT_WALK_LENGTH,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Classes of the common refinement of `partitions` with at least `smin`
/// members, largest first (ties by smallest label).
pub fn stable_communities(partitions: &[Partition], smin: usize) -> Result<Vec<Vec<String>>> {
    if partitions.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "stable communities need at least 2 partitions, got {}",
            partitions.len()
        )));
    }
    let class_of = |p: &Partition| -> Result<HashMap<String, usize>> {
        let mut map = HashMap::new();
        for (c, class) in p.classes.iter().enumerate() {
            for label in class {
                if map.insert(label.clone(), c).is_some() {
                    return Err(Error::InvalidPartition(format!(
                        "vertex `{label}` appears in two classes"
                    )));
                }
            }
        }
        Ok(map)
    };
    let maps = partitions.iter().map(class_of).collect::<Result<Vec<_>>>()?;
    let first = &maps[0];
    for (i, map) in maps.iter().enumerate().skip(1) {
        if map.len() != first.len() || map.keys().any(|k| !first.contains_key(k)) {
            return Err(Error::InvalidPartition(format!(
                "partition {i} covers a different vertex set than partition 0"
            )));
        }
    }
    let mut meet: BTreeMap<Vec<usize>, Vec<String>> = BTreeMap::new();
    for label in first.keys() {
        let signature = maps.iter().map(|m| m[label]).collect();
        meet.entry(signature).or_default().push(label.clone());
    }
    let mut sets: Vec<Vec<String>> = meet
        .into_values()
        .filter(|s| s.len() >= smin)
        .map(|mut s| {
            s.sort();
            s
        })
        .collect();
    sort_label_sets(&mut sets);
    Ok(sets)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommunityOptions {
    pub algorithms: Vec<Method>,
    /// Walktrap walk length.
    pub t: usize,
    pub kmax: Option<usize>,
    pub restarts: usize,
    pub seed: u64,
    pub smin: usize,
}

impl Default for CommunityOptions {
    fn default() -> Self {
        Self {
            algorithms: vec![Method::FastGreedy, Method::Spectral, Method::Walktrap],
            t: DEFAULT_WALK_LENGTH,
            kmax: None,
            restarts: 16,
            seed: 0,
            smin: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Club,
    Community,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Group {
    pub name: String,
    pub kind: GroupKind,
    pub members: Vec<String>,
}

/// Groups as nodes, with the number of edges running between each pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryGraph {
    pub title: String,
    pub groups: Vec<Group>,
    /// `(i, j, count)` with `i < j` indexing `groups`; only nonzero counts.
    pub edges: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemovalAnalysis {
    pub excluded: Vec<String>,
    pub analyzed_vertices: usize,
    pub analyzed_edges: usize,
    pub partitions: Vec<Partition>,
    /// `None` when fewer than two algorithms ran.
    pub stable: Option<Vec<Vec<String>>>,
    pub summaries: Vec<SummaryGraph>,
}

/// Edge counts between disjoint label groups of `g`. Vertices outside every
/// group are ignored.
pub fn inter_group_edges<S: AsRef<str>>(
    g: &Graph,
    groups: &[Vec<S>],
) -> Result<Vec<(usize, usize, usize)>> {
    let mut group_of = vec![usize::MAX; g.vertex_count()];
    for (i, group) in groups.iter().enumerate() {
        for v in g.resolve(group)? {
            if group_of[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "vertex `{}` belongs to two groups",
                    g.label(v)
                )));
            }
            group_of[v] = i;
        }
    }
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (group_of[u], group_of[v]);
        if a == usize::MAX || b == usize::MAX || a == b {
            continue;
        }
        *counts.entry((a.min(b), a.max(b))).or_default() += 1;
    }
    Ok(counts.into_iter().map(|((a, b), c)| (a, b, c)).collect())
}

fn summary_graph(
    g: &Graph,
    title: &str,
    club: &[String],
    classes: &[Vec<String>],
) -> Result<SummaryGraph> {
    let mut groups = Vec::new();
    if !club.is_empty() {
        groups.push(Group {
            name: "club".into(),
            kind: GroupKind::Club,
            members: club.to_vec(),
        });
    }
    let mut community = 0;
    for class in classes {
        let (name, kind) = if class.len() == 1 {
            (class[0].clone(), GroupKind::Singleton)
        } else {
            community += 1;
            (format!("C{community}"), GroupKind::Community)
        };
        groups.push(Group {
            name,
            kind,
            members: class.clone(),
        });
    }
    let members: Vec<Vec<String>> = groups.iter().map(|gr| gr.members.clone()).collect();
    let edges = inter_group_edges(g, &members)?;
    Ok(SummaryGraph {
        title: title.to_owned(),
        groups,
        edges,
    })
}

fn run_method(g: &Graph, method: Method, opts: &CommunityOptions) -> Result<Partition> {
    match method {
        Method::FastGreedy => fast_greedy(g).map(|(p, _)| p),
        Method::Walktrap => walktrap(g, opts.t).map(|(p, _)| p),
        Method::Spectral => spectral_partition(
            g,
            SpectralOptions {
                kmax: opts.kmax,
                restarts: opts.restarts,
                seed: opts.seed,
            },
        ),
        Method::Given => Err(Error::InvalidParameter(
            "`given` is not a partitioning algorithm".into(),
        )),
    }
}

/// Partitions `g` minus `excluded` with every requested algorithm, extracts
/// the stable communities and builds one summary graph per algorithm plus
/// one for the stable communities. Summary edge counts are taken on the
/// full graph so links to the excluded set are kept.
pub fn remove_and_partition<S: AsRef<str>>(
    g: &Graph,
    excluded: &[S],
    opts: &CommunityOptions,
) -> Result<RemovalAnalysis> {
    if opts.algorithms.is_empty() {
        return Err(Error::InvalidParameter("no algorithm requested".into()));
    }
    let removed = g.resolve(excluded)?;
    let mut keep = vec![true; g.vertex_count()];
    for &v in &removed {
        keep[v] = false;
    }
    let rest: Vec<VertexId> = g.vertices().filter(|&v| keep[v]).collect();
    if rest.is_empty() {
        return Err(Error::Degenerate("no vertices left after removal".into()));
    }
    let sub = g.induced_subgraph(&rest)?;
    let partitions = opts
        .algorithms
        .par_iter()
        .map(|&m| run_method(&sub, m, opts))
        .collect::<Result<Vec<_>>>()?;
    let stable = if partitions.len() >= 2 {
        Some(stable_communities(&partitions, opts.smin)?)
    } else {
        None
    };

    let mut club: Vec<String> = removed.iter().map(|&v| g.label(v).to_owned()).collect();
    club.sort();
    club.dedup();
    let mut summaries = partitions
        .iter()
        .map(|p| summary_graph(g, p.method.name(), &club, &p.classes))
        .collect::<Result<Vec<_>>>()?;
    if let Some(stable) = &stable {
        // vertices outside every stable community become singletons
        let mut classes = stable.clone();
        let mut seen: std::collections::HashSet<&str> =
            stable.iter().flatten().map(String::as_str).collect();
        for v in &rest {
            let label = g.label(*v);
            if seen.insert(label) {
                classes.push(vec![label.to_owned()]);
            }
        }
        summaries.push(summary_graph(g, "stable", &club, &classes)?);
    }
    Ok(RemovalAnalysis {
        excluded: club,
        analyzed_vertices: sub.vertex_count(),
        analyzed_edges: sub.edge_count(),
        partitions,
        stable,
        summaries,
    })
}
