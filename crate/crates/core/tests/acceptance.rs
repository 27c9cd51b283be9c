//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;

use num_rational::Ratio;

use concworld::communities::{
    fast_greedy, modularity_of_classes, remove_and_partition, spectral_partition,
    stable_communities, walktrap, CommunityOptions, Method, Partition, SpectralOptions,
};
use concworld::ensemble::{ensemble_summary, sample_er, EnsembleOptions, ErParams};
use concworld::generators::{
    disjoint_cliques, mirrored_club_blocks, planted_club_blocks, planted_partition,
    planted_rich_club, two_cliques_bridge, PlantedClub,
};
use concworld::layout::{
    correlation, czekanovski_dice_on, gram_from_distances, hemicycle_layout,
    mean_distance_to_club, principal_coordinates, project_out_variable, ClubMean,
    HemicycleLayout, HemicycleOptions, Neighborhood,
};
use concworld::metrics::{
    betweenness, density_from_counts, mean_degree_from_counts, structural_summary,
    SummaryOptions,
};
use concworld::report::SeedPlan;
use concworld::richclub::{degree_order, detect_rich_club, rich_club_profile};
use concworld::rng::Stream;
use concworld::{Graph, VertexId};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- 1

fn er_baseline() -> Outcome {
    let params = ErParams {
        n: 51,
        p: 0.416,
        samples: 10_000,
        seed: SeedPlan::new(0).baseline,
    };
    let s = ensemble_summary(&params, EnsembleOptions::default()).map_err(|e| e.to_string())?;
    let targets = [
        ("lbar", 1.584, 0.01),
        ("L", 1.553, 0.01),
        ("D", 2.06, 0.06),
        ("C1", 0.416, 0.01),
        ("C2", 0.415, 0.01),
        ("C_D", 0.163, 0.015),
        ("C_B", 0.006, 0.004),
        ("C_P", 0.141, 0.015),
    ];
    let mut detail = Vec::new();
    let mut bad = Vec::new();
    for (name, want, tol) in targets {
        let got = s.mean(name).ok_or_else(|| format!("{name} undefined"))?;
        detail.push(format!("{name}={got:.4}"));
        if (got - want).abs() > tol {
            bad.push(format!("{name}={got:.4} (want {want} ±{tol})"));
        }
    }
    ensure(bad.is_empty(), || bad.join(", "))?;
    Ok(detail.join(" "))
}

// ---------------------------------------------------------------- 2

fn closed_form_globals() -> Outcome {
    let d = density_from_counts(51, 531);
    let k = mean_degree_from_counts(51, 531);
    let (ds, ks) = (format!("{d:.4}"), format!("{k:.1}"));
    ensure(ds == "0.4165" && ks == "20.8", || format!("d={ds} k={ks}"))?;
    // independent: d = 2m / n(n-1), k = 2m / n
    ensure(d == 1062.0 / 2550.0 && k == 1062.0 / 51.0, || "formula mismatch".into())?;
    Ok(format!("d={ds} k={ks}"))
}

// ---------------------------------------------------------------- 3

fn planted_analogue() -> Outcome {
    let (g, group) = mirrored_club_blocks(8, 12, 0.8, 0.05, 0.9, 1);
    let ix = structural_summary(&g, SummaryOptions::default()).map_err(|e| e.to_string())?;
    let (c1, d) = (ix.c1.unwrap(), ix.density.unwrap());
    ensure(c1 > d, || format!("C1 {c1} not above density {d}"))?;
    let planted: BTreeSet<String> = g
        .vertices()
        .filter(|&v| group[v] == usize::MAX)
        .map(|v| g.label(v).to_owned())
        .collect();
    let profile = rich_club_profile(&g).map_err(|e| e.to_string())?;
    let club = detect_rich_club(&profile, 0.95, 3)
        .map_err(|e| e.to_string())?
        .ok_or("no club detected")?;
    let found: BTreeSet<String> = club.members.iter().cloned().collect();
    ensure(found == planted, || format!("club {found:?} != planted {planted:?}"))?;
    let analysis = remove_and_partition(&g, &club.members, &CommunityOptions::default())
        .map_err(|e| e.to_string())?;
    let mut blocks: Vec<BTreeSet<String>> = vec![BTreeSet::new(); 2];
    for v in g.vertices().filter(|&v| group[v] != usize::MAX) {
        blocks[group[v]].insert(g.label(v).to_owned());
    }
    let stable: BTreeSet<BTreeSet<String>> = analysis
        .stable
        .ok_or("no stable communities")?
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    ensure(stable == blocks.into_iter().collect(), || {
        format!("stable communities {stable:?} differ from planted blocks")
    })?;
    // the mirrored fixture makes the first component orthogonal to the club
    // distance by symmetry, so the correlation analogue uses unmirrored blocks
    let (h, hgroup) = planted_club_blocks(6, 10, 0.7, 0.05, 0.4, 1);
    let hclub: Vec<String> = h
        .vertices()
        .filter(|&v| hgroup[v] == usize::MAX)
        .map(|v| h.label(v).to_owned())
        .collect();
    let lay = hemicycle_layout(&h, &hclub, &HemicycleOptions::default())
        .map_err(|e| e.to_string())?;
    let r = lay.diagnostic_correlation.ok_or("diagnostic correlation undefined")?;
    ensure(r.abs() > 0.5, || format!("first component barely tracks club distance: r={r}"))?;
    Ok(format!(
        "edge-list values not reproducible; analogue: C1={c1:.3}>d={d:.3}, club of {} recovered, \
         stable = planted blocks, diagnostic r={r:.3}",
        club.size
    ))
}

// ---------------------------------------------------------------- 4

/// Every shortest path between `s` and `t`, by exhaustive simple-path search.
fn shortest_paths(g: &Graph, s: VertexId, t: VertexId) -> Vec<Vec<VertexId>> {
    fn walk(g: &Graph, path: &mut Vec<VertexId>, t: VertexId, out: &mut Vec<Vec<VertexId>>) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(v) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, path, t, out);
                path.pop();
            }
        }
    }
    let mut all = Vec::new();
    walk(g, &mut vec![s], t, &mut all);
    let best = all.iter().map(Vec::len).min().unwrap_or(0);
    all.retain(|p| p.len() == best);
    all
}

fn brute_betweenness(g: &Graph) -> Vec<Ratio<i64>> {
    let n = g.vertex_count();
    let mut bc = vec![Ratio::from_integer(0); n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(g, s, t);
            if paths.is_empty() {
                continue;
            }
            let total = paths.len() as i64;
            for v in 0..n {
                let through = paths
                    .iter()
                    .filter(|p| p[1..p.len() - 1].contains(&v))
                    .count() as i64;
                bc[v] += Ratio::new(through, total);
            }
        }
    }
    bc
}

fn betweenness_oracle() -> Outcome {
    let mut graphs = 0;
    let mut worst = 0.0f64;
    for i in 0..240u64 {
        let n = 2 + (i % 6) as usize;
        let p = [0.3, 0.5, 0.7, 0.9][(i / 6 % 4) as usize];
        let g = sample_er(&ErParams { n, p, samples: 1, seed: 41 }, i);
        let fast = betweenness(&g).map_err(|e| e.to_string())?;
        for (v, exact) in brute_betweenness(&g).into_iter().enumerate() {
            let want = *exact.numer() as f64 / *exact.denom() as f64;
            let err = (fast[v] - want).abs();
            worst = worst.max(err);
            // the float must identify the rational exactly
            let scaled = fast[v] * *exact.denom() as f64;
            ensure(err <= 1e-12 && scaled.round() as i64 == *exact.numer(), || {
                format!("graph {i} vertex {v}: fast {} exact {exact}", fast[v])
            })?;
        }
        graphs += 1;
    }
    Ok(format!("{graphs} graphs (n <= 7), max |error| {worst:.1e}"))
}

// ---------------------------------------------------------------- 5

fn direct_modularity(g: &Graph, class_of: &[usize], k: usize) -> f64 {
    let m = g.edge_count() as f64;
    let mut inside = vec![0usize; k];
    let mut degree = vec![0usize; k];
    for (u, v) in g.edges() {
        if class_of[u] == class_of[v] {
            inside[class_of[u]] += 1;
        }
    }
    for v in g.vertices() {
        degree[class_of[v]] += g.degree(v);
    }
    (0..k)
        .map(|c| inside[c] as f64 / m - (degree[c] as f64 / (2.0 * m)).powi(2))
        .sum()
}

fn label_sets(classes: &[Vec<String>]) -> BTreeSet<BTreeSet<String>> {
    classes.iter().map(|c| c.iter().cloned().collect()).collect()
}

fn id_sets(g: &Graph, classes: &[Vec<VertexId>]) -> BTreeSet<BTreeSet<String>> {
    classes
        .iter()
        .map(|c| c.iter().map(|&v| g.label(v).to_owned()).collect())
        .collect()
}

fn all_methods(g: &Graph) -> Result<Vec<Partition>, String> {
    let e = |e: concworld::Error| e.to_string();
    Ok(vec![
        fast_greedy(g).map_err(e)?.0,
        spectral_partition(g, SpectralOptions::default()).map_err(e)?,
        walktrap(g, 4).map_err(e)?.0,
    ])
}

fn modularity_oracle() -> Outcome {
    let mut rng = Stream::new(5, 0);
    let mut pairs = 0;
    let mut worst = 0.0f64;
    for i in 0..200u64 {
        let n = 3 + (i % 14) as usize;
        let g = sample_er(&ErParams { n, p: 0.4, samples: 1, seed: 17 }, i);
        if g.edge_count() == 0 {
            continue;
        }
        let k = 1 + rng.below(n as u64) as usize;
        let class_of: Vec<usize> = (0..n).map(|_| rng.below(k as u64) as usize).collect();
        let mut classes: Vec<Vec<VertexId>> = vec![Vec::new(); k];
        for v in 0..n {
            classes[class_of[v]].push(v);
        }
        let nonempty: Vec<Vec<VertexId>> = classes.into_iter().filter(|c| !c.is_empty()).collect();
        let got = modularity_of_classes(&g, &nonempty).map_err(|e| e.to_string())?;
        let want = direct_modularity(&g, &class_of, k);
        worst = worst.max((got - want).abs());
        ensure((got - want).abs() <= 1e-12, || format!("pair {i}: {got} vs {want}"))?;
        pairs += 1;
    }
    ensure(pairs >= 100, || format!("only {pairs} pairs"))?;

    let bridge = two_cliques_bridge(5);
    let cliques = id_sets(&bridge, &[(0..5).collect(), (5..10).collect()]);
    let mut uneven_edges = Vec::new();
    for (lo, hi) in [(0, 3), (3, 7), (7, 12)] {
        for u in lo..hi {
            for v in u + 1..hi {
                uneven_edges.push((u, v));
            }
        }
    }
    let uneven = Graph::with_numbered_vertices(12, &uneven_edges).unwrap();
    let fixtures = [
        ("two-K5 bridge", bridge, cliques),
        ("3 x K4", disjoint_cliques(3, 4), BTreeSet::new()),
        ("K3+K4+K5", uneven, BTreeSet::new()),
    ];
    for (name, g, want) in fixtures {
        let want = if want.is_empty() {
            id_sets(&g, &g.connected_components())
        } else {
            want
        };
        for p in all_methods(&g)? {
            ensure(label_sets(&p.classes) == want, || {
                format!("{} on {name}: {:?}", p.method.name(), p.classes)
            })?;
        }
    }
    Ok(format!(
        "{pairs} pairs, max |error| {worst:.1e}; cliques and components recovered by all three methods"
    ))
}

// ---------------------------------------------------------------- 6

/// Fraction of vertices covered by the best injective class-to-block map.
fn agreement(classes: &[Vec<usize>], truth: &[usize], blocks: usize) -> f64 {
    let overlap: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut row = vec![0; blocks];
            for &v in c {
                row[truth[v]] += 1;
            }
            row
        })
        .collect();
    fn best(overlap: &[Vec<usize>], i: usize, used: &mut Vec<bool>) -> usize {
        if i == overlap.len() {
            return 0;
        }
        let mut top = best(overlap, i + 1, used);
        for b in 0..used.len() {
            if !used[b] {
                used[b] = true;
                top = top.max(overlap[i][b] + best(overlap, i + 1, used));
                used[b] = false;
            }
        }
        top
    }
    best(&overlap, 0, &mut vec![false; blocks]) as f64 / truth.len() as f64
}

fn planted_recovery() -> Outcome {
    let mut worst = (1.0f64, 1.0f64);
    for seed in 0..50u64 {
        let (g, truth) = planted_partition(4, 8, 0.9, 0.05, seed);
        let ids = |p: &Partition| -> Vec<Vec<usize>> {
            p.classes.iter().map(|c| g.resolve(c).unwrap()).collect()
        };
        let sp = spectral_partition(&g, SpectralOptions { seed, ..SpectralOptions::default() })
            .map_err(|e| e.to_string())?;
        let wt = walktrap(&g, 4).map_err(|e| e.to_string())?.0;
        let (a, b) = (agreement(&ids(&sp), &truth, 4), agreement(&ids(&wt), &truth, 4));
        worst = (worst.0.min(a), worst.1.min(b));
        ensure(a >= 0.95 && b >= 0.95, || {
            format!("seed {seed}: spectral {a:.3}, walktrap {b:.3}")
        })?;
    }

    let params = PlantedClub { n: 60, club: 8, p: 0.05, boost: 0.2 };
    let hits = (0..200u64)
        .filter(|&seed| {
            let g = planted_rich_club(params, seed);
            let profile = rich_club_profile(&g).unwrap();
            matches!(detect_rich_club(&profile, 0.95, 3).unwrap(), Some(c) if c.size == 8)
        })
        .count();
    ensure(hits >= 190, || format!("rich club recovered in {hits}/200"))?;

    // ten-vertex club with exactly one internal edge missing
    let base = planted_rich_club(PlantedClub { n: 30, club: 10, p: 0.1, boost: 0.5 }, 3);
    let edges: Vec<(usize, usize)> = base.edges().filter(|&e| e != (0, 1)).collect();
    let g = Graph::from_edges(base.labels(), &edges).unwrap();
    let profile = rich_club_profile(&g).map_err(|e| e.to_string())?;
    let top: BTreeSet<usize> = degree_order(&g)[..10].iter().copied().collect();
    ensure(top == (0..10).collect(), || format!("club not top-ranked: {top:?}"))?;
    let phi = profile.phi(10).ok_or("phi(10) undefined")?;
    ensure((phi - 44.0 / 45.0).abs() <= 1e-15, || format!("phi(10) = {phi}"))?;
    Ok(format!(
        "worst agreement spectral {:.3} walktrap {:.3} over 50 seeds; club size {hits}/200; phi(10)=44/45",
        worst.0, worst.1
    ))
}

// ---------------------------------------------------------------- 7

fn mds_round_trip() -> Outcome {
    let (mut dist_err, mut min_eig, mut row_sum, mut corr_max) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let mut checked = 0;
    for i in 0..50u64 {
        let n = 20 + (i % 20) as usize;
        let g = sample_er(&ErParams { n, p: 0.3, samples: 1, seed: 7 }, i);
        let used: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
        let dm = czekanovski_dice_on(&g, &used, Neighborhood::Open).map_err(|e| e.to_string())?;
        let gram = gram_from_distances(&dm).map_err(|e| e.to_string())?;
        let lmax = gram.values[0].max(0.0);
        let emb = principal_coordinates(&gram, Some(1e-10 * lmax)).map_err(|e| e.to_string())?;
        for a in 0..dm.len() {
            row_sum = row_sum.max(gram.w.row(a).sum().abs());
            for b in 0..dm.len() {
                let d = (emb.x.row(a) - emb.x.row(b)).norm();
                dist_err = dist_err.max((d - dm.delta(a, b)).abs());
            }
        }
        min_eig = min_eig.min(*gram.values.last().unwrap());

        // project the mean distance to the three top-degree vertices out
        let order = degree_order(&g);
        let club_rows: Vec<usize> = order[..3]
            .iter()
            .map(|&v| used.iter().position(|&u| u == v).unwrap())
            .collect();
        let means = mean_distance_to_club(&dm, &club_rows, ClubMean::Delta)
            .map_err(|e| e.to_string())?;
        let rows: Vec<usize> = means.iter().map(|m| m.0).collect();
        let dbar: Vec<f64> = means.iter().map(|m| m.1).collect();
        let pg = gram_from_distances(&dm.restrict(&rows)).map_err(|e| e.to_string())?;
        let pe = principal_coordinates(&pg, Some(1e-10 * pg.values[0].max(0.0)))
            .map_err(|e| e.to_string())?;
        let proj = project_out_variable(&pe, &dbar).map_err(|e| e.to_string())?;
        for j in 0..proj.y.ncols() {
            let col: Vec<f64> = proj.y.column(j).iter().copied().collect();
            if let Some(r) = correlation(&col, &dbar) {
                corr_max = corr_max.max(r.abs());
            }
        }
        checked += 1;
    }
    ensure(dist_err <= 1e-8, || format!("distance error {dist_err:e}"))?;
    ensure(min_eig >= -1e-9, || format!("Gram eigenvalue {min_eig:e}"))?;
    ensure(row_sum <= 1e-10, || format!("Gram row sum {row_sum:e}"))?;
    ensure(corr_max < 1e-8, || format!("post-projection correlation {corr_max:e}"))?;
    Ok(format!(
        "{checked} graphs: distance error {dist_err:.1e}, min eigenvalue {min_eig:.1e}, \
         row sums {row_sum:.1e}, correlation {corr_max:.1e}"
    ))
}

// ---------------------------------------------------------------- 8

fn planted_layouts() -> Vec<(Graph, Vec<String>)> {
    let club_of = |g: &Graph, group: &[usize]| -> Vec<String> {
        g.vertices()
            .filter(|&v| group[v] == usize::MAX)
            .map(|v| g.label(v).to_owned())
            .collect()
    };
    let mut out = Vec::new();
    for seed in 0..25u64 {
        let (g, group) = mirrored_club_blocks(8, 12, 0.8, 0.05, 0.5, seed);
        let club = club_of(&g, &group);
        out.push((g, club));
        let (g, group) = planted_club_blocks(6, 10, 0.7, 0.05, 0.4, seed);
        let club = club_of(&g, &group);
        out.push((g, club));
    }
    out
}

fn permuted(g: &Graph, seed: u64) -> Graph {
    let mut order: Vec<VertexId> = g.vertices().collect();
    Stream::new(seed, 1).shuffle(&mut order);
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let labels: Vec<&str> = order.iter().map(|&v| g.label(v)).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (pos[u], pos[v])).collect();
    Graph::from_edges(&labels, &edges).unwrap()
}

/// Largest distance in a greedy one-to-one matching of the two `(r, θ)`
/// multisets; mirrored fixtures have exactly tied radii, so sorting alone
/// would pair the wrong points.
fn multiset_drift(a: &HemicycleLayout, b: &HemicycleLayout) -> f64 {
    let mut free: Vec<(f64, f64)> = b.points.iter().map(|p| (p.r, p.theta)).collect();
    if free.len() != a.points.len() {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for p in &a.points {
        let gap = |q: &(f64, f64)| (p.r - q.0).abs().max((p.theta - q.1).abs());
        let (i, d) = free
            .iter()
            .enumerate()
            .map(|(i, q)| (i, gap(q)))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .unwrap();
        worst = worst.max(d);
        free.swap_remove(i);
    }
    worst
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run_report(seed: &str) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_concworld"))
        .args(["report", "--samples", "200", "--seed", seed, "--json", "-"])
        .arg(fixture("planted.csv"))
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    Ok(out.stdout)
}

fn layout_ranges_determinism() -> Outcome {
    let opts = HemicycleOptions::default();
    let mut points = 0;
    let mut worst = 0.0f64;
    let layouts = planted_layouts();
    for (i, (g, club)) in layouts.iter().enumerate() {
        let lay = hemicycle_layout(g, club, &opts).map_err(|e| format!("layout {i}: {e}"))?;
        for p in &lay.points {
            ensure((0.2..=1.0).contains(&p.r) && (0.0..=std::f64::consts::PI).contains(&p.theta), || {
                format!("layout {i}: {} at r={} theta={}", p.label, p.r, p.theta)
            })?;
        }
        points += lay.points.len();
        let again = hemicycle_layout(g, club, &opts).unwrap();
        ensure(
            serde_json::to_string(&lay).unwrap() == serde_json::to_string(&again).unwrap(),
            || format!("layout {i} not bit-identical"),
        )?;
        let perm = hemicycle_layout(&permuted(g, i as u64), club, &opts)
            .map_err(|e| format!("permuted layout {i}: {e}"))?;
        worst = worst.max(multiset_drift(&lay, &perm));
        ensure(worst <= 1e-9, || format!("layout {i}: permutation moved points by {worst:e}"))?;
    }
    let (a, b) = (run_report("11")?, run_report("11")?);
    ensure(a == b, || "CLI report differs between identical runs".into())?;
    Ok(format!(
        "{} layouts, {points} points in range; permutation drift {worst:.1e}; CLI report bit-identical",
        layouts.len()
    ))
}

// ---------------------------------------------------------------- 9

fn random_partition(labels: &[String], rng: &mut Stream) -> Partition {
    let k = 1 + rng.below(5) as usize;
    let mut classes: Vec<Vec<String>> = vec![Vec::new(); k];
    for l in labels {
        classes[rng.below(k as u64) as usize].push(l.clone());
    }
    classes.retain(|c| !c.is_empty());
    Partition {
        method: Method::Given,
        classes,
        modularity: 0.0,
    }
}

fn meet_algebra() -> Outcome {
    let mut rng = Stream::new(9, 0);
    let mut triples = 0;
    for _ in 0..300 {
        let n = 1 + rng.below(25) as usize;
        let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let parts: Vec<Partition> = (0..3).map(|_| random_partition(&labels, &mut rng)).collect();
        let meet = stable_communities(&parts, 1).map_err(|e| e.to_string())?;
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let reordered: Vec<Partition> = perm.iter().map(|&i| parts[i].clone()).collect();
            let other = stable_communities(&reordered, 1).map_err(|e| e.to_string())?;
            ensure(other == meet, || format!("order {perm:?} changed the meet"))?;
        }
        let class_maps: Vec<HashMap<&str, usize>> = parts
            .iter()
            .map(|p| {
                p.classes
                    .iter()
                    .enumerate()
                    .flat_map(|(c, cl)| cl.iter().map(move |l| (l.as_str(), c)))
                    .collect()
            })
            .collect();
        let signature =
            |l: &str| -> Vec<usize> { class_maps.iter().map(|m| m[l]).collect() };
        for set in &meet {
            for p in &parts {
                ensure(p.classes.iter().any(|c| set.iter().all(|l| c.contains(l))), || {
                    format!("{set:?} does not refine {:?}", p.classes)
                })?;
            }
        }
        // coarsest: co-classified by every input iff in the same output set
        let covered: usize = meet.iter().map(Vec::len).sum();
        ensure(covered == n, || format!("meet covers {covered} of {n}"))?;
        let owner: HashMap<&str, usize> = meet
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |l| (l.as_str(), i)))
            .collect();
        for a in &labels {
            for b in &labels {
                let together = owner[a.as_str()] == owner[b.as_str()];
                ensure(together == (signature(a) == signature(b)), || {
                    format!("{a} and {b} misgrouped")
                })?;
            }
        }
        triples += 1;
    }
    Ok(format!("{triples} random triples, 6 orders each"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 9] = [
        (1, "ER baseline reproduction", er_baseline),
        (2, "closed-form globals", closed_form_globals),
        (3, "edge-list values via planted analogue", planted_analogue),
        (4, "betweenness oracle", betweenness_oracle),
        (5, "modularity oracle and recovery", modularity_oracle),
        (6, "planted recovery", planted_recovery),
        (7, "MDS round trip", mds_round_trip),
        (8, "layout ranges and determinism", layout_ranges_determinism),
        (9, "stable-community algebra", meet_algebra),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
