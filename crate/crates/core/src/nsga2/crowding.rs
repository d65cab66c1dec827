use std::cmp::Ordering;

use super::sort::FrontPartition;
use crate::model::{Crowding, Population};

/// Crowding distances of the points of one front, in input order.
///
/// Per objective, the points are ordered by value (ties broken by comparing
/// whole vectors lexicographically, then by position), both extremes become
/// infinite and every interior point accumulates the normalized gap between
/// its neighbours. An objective with zero range contributes nothing.
pub fn crowding_distance_assignment<V: AsRef<[f64]>>(front: &[V]) -> Vec<Crowding> {
    let len = front.len();
    if len == 0 {
        return Vec::new();
    }
    let n_obj = front[0].as_ref().len();
    let mut distance = vec![0.0f64; len];
    let mut infinite = vec![false; len];
    let mut order: Vec<usize> = (0..len).collect();

    for m in 0..n_obj {
        order.sort_by(|&a, &b| {
            let (fa, fb) = (front[a].as_ref(), front[b].as_ref());
            fa[m]
                .total_cmp(&fb[m])
                .then_with(|| lexicographic(fa, fb))
                .then(a.cmp(&b))
        });
        let first = front[order[0]].as_ref()[m];
        let last = front[order[len - 1]].as_ref()[m];
        infinite[order[0]] = true;
        infinite[order[len - 1]] = true;
        let range = last - first;
        if range <= 0.0 {
            continue;
        }
        for w in order.windows(3) {
            let gap = front[w[2]].as_ref()[m] - front[w[0]].as_ref()[m];
            distance[w[1]] += gap / range;
        }
    }

    distance
        .into_iter()
        .zip(infinite)
        .map(|(d, inf)| {
            if inf {
                Crowding::Infinite
            } else {
                Crowding::Finite(d)
            }
        })
        .collect()
}

fn lexicographic(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Computes crowding front by front and stores it on the members.
pub fn assign_crowding(pop: &mut Population, partition: &FrontPartition) {
    for front in &partition.fronts {
        let points: Vec<&[f64]> = front
            .iter()
            .map(|&i| &pop.members[i].objectives[..])
            .collect();
        for (&i, c) in front.iter().zip(crowding_distance_assignment(&points)) {
            pop.members[i].crowding = Some(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(c: Crowding) -> f64 {
        c.finite().expect("finite crowding")
    }

    #[test]
    fn four_point_front() {
        let front = [[0.0, 3.0], [1.0, 2.0], [2.0, 1.0], [3.0, 0.0]];
        let c = crowding_distance_assignment(&front);
        assert!(c[0].is_infinite() && c[3].is_infinite());
        assert!((finite(c[1]) - 4.0 / 3.0).abs() < 1e-15);
        assert!((finite(c[2]) - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn small_fronts_are_all_boundary() {
        assert!(crowding_distance_assignment(&[[1.0, 2.0]])[0].is_infinite());
        let two = crowding_distance_assignment(&[[1.0, 2.0], [2.0, 1.0]]);
        assert!(two.iter().all(|c| c.is_infinite()));
    }

    #[test]
    fn degenerate_objective_contributes_zero() {
        let front = [[0.0, 1.0], [1.0, 1.0], [2.0, 1.0]];
        let c = crowding_distance_assignment(&front);
        assert_eq!(finite(c[1]), 1.0);
    }

    #[test]
    fn permutation_invariant_with_ties() {
        let front = vec![[0.0, 2.0], [1.0, 1.0], [1.0, 1.0], [2.0, 0.0], [0.5, 1.5]];
        let base = crowding_distance_assignment(&front);
        let perm = [3, 1, 4, 0, 2];
        let shuffled: Vec<[f64; 2]> = perm.iter().map(|&i| front[i]).collect();
        let c = crowding_distance_assignment(&shuffled);
        // duplicates may swap roles but the multiset of values must agree
        let mut a: Vec<Crowding> = base.clone();
        let mut b: Vec<Crowding> = c.clone();
        a.sort();
        b.sort();
        assert_eq!(a, b);
        for (k, &i) in perm.iter().enumerate() {
            if i != 1 && i != 2 {
                assert_eq!(c[k], base[i]);
            }
        }
    }
}
