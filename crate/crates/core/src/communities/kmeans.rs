//! Lloyd's k-means with farthest-point initialization and seeded restarts.

use rayon::prelude::*;

use crate::rng::Stream;

#[derive(Debug, Clone, PartialEq)]
pub struct KMeansFit {
    pub assignment: Vec<usize>,
    pub centers: Vec<Vec<f64>>,
    /// Within-cluster sum of squared distances.
    pub inertia: f64,
    pub restart: usize,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(p: &[f64], centers: &[Vec<f64>]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (c, center) in centers.iter().enumerate() {
        let d = sq_dist(p, center);
        if d < best.1 {
            best = (c, d);
        }
    }
    best
}

/// First center chosen by the stream; each further center is the point
/// farthest from those already chosen (lowest index on ties).
fn farthest_point_init(points: &[Vec<f64>], k: usize, rng: &mut Stream) -> Vec<Vec<f64>> {
    let first = rng.below(points.len() as u64) as usize;
    let mut centers = vec![points[first].clone()];
    let mut min_d: Vec<f64> = points.iter().map(|p| sq_dist(p, &points[first])).collect();
    while centers.len() < k {
        let (idx, _) = min_d
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
        centers.push(points[idx].clone());
        for (d, p) in min_d.iter_mut().zip(points) {
            *d = d.min(sq_dist(p, &points[idx]));
        }
    }
    centers
}

fn lloyd(points: &[Vec<f64>], mut centers: Vec<Vec<f64>>, max_iter: usize) -> (Vec<usize>, Vec<Vec<f64>>, f64) {
    let dim = points[0].len();
    let mut assignment = vec![usize::MAX; points.len()];
    for _ in 0..max_iter {
        let mut changed = false;
        for (a, p) in assignment.iter_mut().zip(points) {
            let (c, _) = nearest(p, &centers);
            if *a != c {
                *a = c;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        let mut sums = vec![vec![0.0; dim]; centers.len()];
        let mut counts = vec![0usize; centers.len()];
        for (&a, p) in assignment.iter().zip(points) {
            counts[a] += 1;
            for (s, x) in sums[a].iter_mut().zip(p) {
                *s += x;
            }
        }
        for (c, center) in centers.iter_mut().enumerate() {
            // empty clusters keep their previous center
            if counts[c] > 0 {
                for (x, s) in center.iter_mut().zip(&sums[c]) {
                    *x = s / counts[c] as f64;
                }
            }
        }
    }
    let inertia = assignment
        .iter()
        .zip(points)
        .map(|(&a, p)| sq_dist(p, &centers[a]))
        .sum();
    (assignment, centers, inertia)
}

/// Best of `restarts` runs (lowest inertia, then lowest restart index).
/// Restart `r` draws its first center from stream `(seed, r)`.
pub fn kmeans(points: &[Vec<f64>], k: usize, restarts: usize, seed: u64) -> KMeansFit {
    assert!(!points.is_empty() && k >= 1, "k-means needs points and k >= 1");
    let k = k.min(points.len());
    let fits: Vec<KMeansFit> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let mut rng = Stream::new(seed, r as u64);
            let init = farthest_point_init(points, k, &mut rng);
            let (assignment, centers, inertia) = lloyd(points, init, 300);
            KMeansFit {
                assignment,
                centers,
                inertia,
                restart: r,
            }
        })
        .collect();
    fits.into_iter()
        .reduce(|best, f| if f.inertia < best.inertia { f } else { best })
        .expect("at least one restart")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separates_obvious_blobs() {
        let mut pts = Vec::new();
        for i in 0..5 {
            pts.push(vec![0.0 + 0.01 * i as f64, 0.0]);
            pts.push(vec![10.0, 10.0 + 0.01 * i as f64]);
        }
        let fit = kmeans(&pts, 2, 4, 0);
        for i in 0..5 {
            assert_eq!(fit.assignment[2 * i], fit.assignment[0]);
            assert_eq!(fit.assignment[2 * i + 1], fit.assignment[1]);
        }
        assert_ne!(fit.assignment[0], fit.assignment[1]);
        assert!((fit.inertia - 0.002).abs() < 1e-12);
    }

    #[test]
    fn deterministic_for_seed() {
        let pts: Vec<Vec<f64>> = (0..30)
            .map(|i| vec![(i * 7 % 11) as f64, (i * 5 % 13) as f64])
            .collect();
        assert_eq!(kmeans(&pts, 3, 8, 42), kmeans(&pts, 3, 8, 42));
    }

    #[test]
    fn k_larger_than_points() {
        let pts = vec![vec![0.0], vec![1.0]];
        let fit = kmeans(&pts, 5, 1, 0);
        assert_eq!(fit.centers.len(), 2);
        assert_eq!(fit.inertia, 0.0);
    }
}
