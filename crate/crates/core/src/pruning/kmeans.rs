use rand::Rng;

use crate::error::{usage, Result};

/// One group of rows found by k-means.
#[derive(Clone, Debug, PartialEq)]
pub struct Cluster {
    /// Row indices in ascending order; never empty.
    pub members: Vec<usize>,
    pub centroid: Vec<f64>,
    /// Intra-class average similarity, filled in by pruning.
    pub avg_similarity: f64,
}

#[derive(Clone, Debug)]
pub struct KMeansOutcome {
    pub clusters: Vec<Cluster>,
    /// Within-cluster sum of squares after each assignment step.
    pub inertia_trace: Vec<f64>,
    /// Set when fewer rows than requested clusters forced a smaller `k`.
    pub k_reduced: bool,
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(row: &[f64], centroids: &[Vec<f64>]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (c, centroid) in centroids.iter().enumerate() {
        let d = dist2(row, centroid);
        if d < best.1 {
            best = (c, d);
        }
    }
    best
}

/// k-means++ seeding. The first centre is a uniform index draw; each later
/// centre takes one uniform draw mapped through the squared-distance weights.
/// When every row already coincides with a centre, the lowest unused index is
/// taken without drawing.
fn seed_centroids<R: Rng + ?Sized>(rows: &[Vec<f64>], k: usize, rng: &mut R) -> Vec<Vec<f64>> {
    let mut chosen = vec![rng.random_range(0..rows.len())];
    let mut d2: Vec<f64> = rows.iter().map(|r| dist2(r, &rows[chosen[0]])).collect();
    while chosen.len() < k {
        let total: f64 = d2.iter().sum();
        let pick = if total > 0.0 {
            let target = rng.random::<f64>() * total;
            let mut acc = 0.0;
            let mut pick = None;
            for (i, w) in d2.iter().enumerate() {
                acc += w;
                if *w > 0.0 && acc > target {
                    pick = Some(i);
                    break;
                }
            }
            // rounding can leave target at the very end of the range
            pick.unwrap_or_else(|| d2.iter().rposition(|w| *w > 0.0).expect("positive weight"))
        } else {
            (0..rows.len())
                .find(|i| !chosen.contains(i))
                .expect("k <= rows")
        };
        chosen.push(pick);
        for (d, r) in d2.iter_mut().zip(rows) {
            *d = d.min(dist2(r, &rows[pick]));
        }
    }
    chosen.into_iter().map(|i| rows[i].clone()).collect()
}

/// Lloyd's algorithm with k-means++ seeding on the squared Euclidean objective.
///
/// Iterates until the assignment stops changing, the largest centroid move
/// falls below `tol`, or `max_iter` assignment steps have run. A cluster left
/// empty by an assignment step takes the row farthest from its own centroid
/// among clusters with more than one member. With fewer rows than `k`, `k`
/// drops to the row count and the outcome is flagged.
pub fn kmeans<R: Rng + ?Sized>(
    rows: &[Vec<f64>],
    k: usize,
    max_iter: usize,
    tol: f64,
    rng: &mut R,
) -> Result<KMeansOutcome> {
    if rows.is_empty() {
        return Err(usage("k-means on an empty feature matrix"));
    }
    if k == 0 {
        return Err(usage("k-means needs at least one cluster"));
    }
    let k_reduced = rows.len() < k;
    let k = k.min(rows.len());
    let mut centroids = seed_centroids(rows, k, rng);
    let mut assignment: Vec<usize> = vec![usize::MAX; rows.len()];
    let mut inertia_trace = Vec::new();

    for _ in 0..max_iter.max(1) {
        let mut next: Vec<usize> = rows.iter().map(|r| nearest(r, &centroids).0).collect();
        repair_empty(rows, &mut next, &mut centroids);
        let inertia: f64 = rows
            .iter()
            .zip(&next)
            .map(|(r, &c)| dist2(r, &centroids[c]))
            .sum();
        inertia_trace.push(inertia);
        let unchanged = next == assignment;
        assignment = next;
        if unchanged {
            break;
        }
        let updated = means(rows, &assignment, k);
        let shift = centroids
            .iter()
            .zip(&updated)
            .map(|(a, b)| dist2(a, b).sqrt())
            .fold(0.0, f64::max);
        centroids = updated;
        if shift < tol {
            break;
        }
    }

    let mut clusters: Vec<Cluster> = centroids
        .into_iter()
        .map(|centroid| Cluster {
            members: Vec::new(),
            centroid,
            avg_similarity: 0.0,
        })
        .collect();
    for (i, &c) in assignment.iter().enumerate() {
        clusters[c].members.push(i);
    }
    Ok(KMeansOutcome {
        clusters,
        inertia_trace,
        k_reduced,
    })
}

fn means(rows: &[Vec<f64>], assignment: &[usize], k: usize) -> Vec<Vec<f64>> {
    let width = rows[0].len();
    let mut sums = vec![vec![0.0; width]; k];
    let mut counts = vec![0usize; k];
    for (r, &c) in rows.iter().zip(assignment) {
        counts[c] += 1;
        for (s, v) in sums[c].iter_mut().zip(r) {
            *s += v;
        }
    }
    for (s, n) in sums.iter_mut().zip(counts) {
        for v in s.iter_mut() {
            *v /= n as f64;
        }
    }
    sums
}

fn repair_empty(rows: &[Vec<f64>], assignment: &mut [usize], centroids: &mut [Vec<f64>]) {
    let k = centroids.len();
    loop {
        let mut counts = vec![0usize; k];
        for &c in assignment.iter() {
            counts[c] += 1;
        }
        let Some(empty) = counts.iter().position(|&n| n == 0) else {
            return;
        };
        let mut far = None;
        let mut far_d = f64::NEG_INFINITY;
        for (i, &c) in assignment.iter().enumerate() {
            if counts[c] > 1 {
                let d = dist2(&rows[i], &centroids[c]);
                if d > far_d {
                    far = Some(i);
                    far_d = d;
                }
            }
        }
        let i = far.expect("k <= rows leaves a cluster with spare members");
        assignment[i] = empty;
        centroids[empty] = rows[i].clone();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn separated_groups_are_recovered() {
        let rows: Vec<Vec<f64>> = vec![
            vec![0.0, 0.0],
            vec![0.1, 0.0],
            vec![0.0, 0.1],
            vec![5.0, 5.0],
            vec![5.1, 5.0],
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let out = kmeans(&rows, 2, 100, 1e-9, &mut rng).unwrap();
        let mut groups: Vec<Vec<usize>> = out.clusters.iter().map(|c| c.members.clone()).collect();
        groups.sort();
        assert_eq!(groups, vec![vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn k_equal_rows_gives_singletons() {
        let rows: Vec<Vec<f64>> = (0..5).map(|i| vec![i as f64]).collect();
        let out = kmeans(&rows, 5, 100, 1e-9, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert!(out.clusters.iter().all(|c| c.members.len() == 1));
        assert_eq!(*out.inertia_trace.last().unwrap(), 0.0);
    }

    #[test]
    fn duplicates_still_fill_every_cluster() {
        let rows = vec![vec![1.0]; 6];
        let out = kmeans(&rows, 3, 100, 1e-9, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(out.clusters.len(), 3);
        assert!(out.clusters.iter().all(|c| !c.members.is_empty()));
    }

    #[test]
    fn too_few_rows_reduces_k() {
        let rows = vec![vec![0.0], vec![1.0]];
        let out = kmeans(&rows, 5, 100, 1e-9, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert!(out.k_reduced);
        assert_eq!(out.clusters.len(), 2);
    }
}
