//! Planted-structure checks for the summary graphs and the hemicycle.

use concworld::communities::{remove_and_partition, CommunityOptions, GroupKind};
use concworld::generators::mirrored_club_blocks;
use concworld::layout::{hemicycle_layout, HemicycleOptions};
use concworld::report::export_dot;
use concworld::Graph;

/// K6 club, three K7 blocks, every block vertex tied to two club members and
/// one edge between each pair of blocks.
fn club_and_three_blocks() -> (Graph, Vec<Vec<usize>>) {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            edges.push((u, v));
        }
    }
    let blocks: Vec<Vec<usize>> = (0..3).map(|b| (6 + 7 * b..13 + 7 * b).collect()).collect();
    for (b, block) in blocks.iter().enumerate() {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                edges.push((u, v));
            }
            edges.push(((2 * b) % 6, u));
            edges.push(((2 * b + 1 + i % 3) % 6, u));
        }
    }
    edges.push((blocks[0][0], blocks[1][0]));
    edges.push((blocks[1][1], blocks[2][1]));
    edges.push((blocks[0][2], blocks[2][2]));
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort();
    edges.dedup();
    (Graph::with_numbered_vertices(27, &edges).unwrap(), blocks)
}

#[test]
fn dot_summary_of_three_blocks() {
    let (g, blocks) = club_and_three_blocks();
    let club: Vec<String> = (0..6).map(|v| g.label(v).to_owned()).collect();
    let analysis = remove_and_partition(&g, &club, &CommunityOptions::default()).unwrap();
    let stable = analysis.summaries.iter().find(|s| s.title == "stable").unwrap();
    let communities: Vec<_> = stable.groups.iter().filter(|gr| gr.kind == GroupKind::Community).collect();
    assert_eq!(communities.len(), 3);

    // brute-force edge counts between the planted groups
    let mut groups: Vec<Vec<usize>> = vec![(0..6).collect()];
    groups.extend(blocks);
    let group_of = |label: &str| {
        let v = g.vertex_id(label).unwrap();
        groups.iter().position(|gr| gr.contains(&v)).unwrap()
    };
    for &(a, b, count) in &stable.edges {
        let ga = group_of(&stable.groups[a].members[0]);
        let gb = group_of(&stable.groups[b].members[0]);
        let brute = g
            .edges()
            .filter(|&(u, v)| {
                let (x, y) = (groups.iter().position(|gr| gr.contains(&u)).unwrap(), groups.iter().position(|gr| gr.contains(&v)).unwrap());
                (x, y) == (ga, gb) || (x, y) == (gb, ga)
            })
            .count();
        assert_eq!(count, brute, "groups {ga} {gb}");
    }
    assert_eq!(stable.edges.len(), 6);

    let dot = export_dot(stable);
    assert_eq!(dot.matches("shape=diamond").count(), 3);
    assert_eq!(dot.matches("shape=box").count(), 1);
    assert_eq!(dot.matches(" -- ").count(), 6);
}

/// Each periphery block occupies its own angular sector: the θ spread inside
/// a block is smaller than the gap separating the two blocks.
#[test]
fn hemicycle_separates_mirrored_blocks() {
    for seed in 0..50 {
        let (g, group) = mirrored_club_blocks(8, 12, 0.8, 0.05, 0.5, seed);
        let club: Vec<String> = g
            .vertices()
            .filter(|&v| group[v] == usize::MAX)
            .map(|v| g.label(v).to_owned())
            .collect();
        let lay = hemicycle_layout(&g, &club, &HemicycleOptions::default()).unwrap();
        let mut spans = [(f64::INFINITY, f64::NEG_INFINITY); 2];
        for p in &lay.points {
            let b = group[g.vertex_id(&p.label).unwrap()];
            spans[b] = (spans[b].0.min(p.theta), spans[b].1.max(p.theta));
        }
        let (lo, hi) = if spans[0].0 < spans[1].0 { (spans[0], spans[1]) } else { (spans[1], spans[0]) };
        let gap = hi.0 - lo.1;
        let spread = (lo.1 - lo.0).max(hi.1 - hi.0);
        assert!(gap > 0.0 && spread < gap, "seed {seed}: spans {spans:?}");
    }
}
