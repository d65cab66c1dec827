use crate::model::{compare, Dominance, Population};

/// Front decomposition of a set of points. `fronts[r]` lists, in ascending
/// order, the indices of rank `r`; `ranks[i]` is the rank of index `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontPartition {
    pub fronts: Vec<Vec<usize>>,
    pub ranks: Vec<usize>,
}

/// Fast non-dominated sort over an arbitrary dominance relation on
/// `0..len`.
pub fn sort_by_dominance<F>(len: usize, mut relation: F) -> FrontPartition
where
    F: FnMut(usize, usize) -> Dominance,
{
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); len];
    let mut counts = vec![0usize; len];
    for p in 0..len {
        for q in p + 1..len {
            match relation(p, q) {
                Dominance::FirstDominates => {
                    dominated_by[p].push(q);
                    counts[q] += 1;
                }
                Dominance::SecondDominates => {
                    dominated_by[q].push(p);
                    counts[p] += 1;
                }
                _ => {}
            }
        }
    }

    let mut ranks = vec![0usize; len];
    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..len).filter(|&i| counts[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            ranks[p] = fronts.len();
            for &q in &dominated_by[p] {
                counts[q] -= 1;
                if counts[q] == 0 {
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    FrontPartition { fronts, ranks }
}

/// Non-dominated sort of raw objective vectors.
pub fn nondominated_fronts<V: AsRef<[f64]>>(points: &[V]) -> FrontPartition {
    sort_by_dominance(points.len(), |a, b| {
        compare(points[a].as_ref(), points[b].as_ref())
    })
}

/// Sorts a population and stores each member's rank.
pub fn fast_nondominated_sort(pop: &mut Population) -> FrontPartition {
    let partition = nondominated_fronts(&pop.objectives());
    for (member, &rank) in pop.members.iter_mut().zip(&partition.ranks) {
        member.rank = Some(rank);
    }
    partition
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_example() {
        let pts = [
            [1.0, 4.0],
            [2.0, 2.0],
            [4.0, 1.0],
            [3.0, 3.0],
            [5.0, 5.0],
            [2.0, 2.0],
        ];
        let p = nondominated_fronts(&pts);
        assert_eq!(p.fronts, vec![vec![0, 1, 2, 5], vec![3], vec![4]]);
        assert_eq!(p.ranks, vec![0, 0, 0, 1, 2, 0]);
    }

    #[test]
    fn empty_input() {
        let pts: [[f64; 2]; 0] = [];
        let p = nondominated_fronts(&pts);
        assert!(p.fronts.is_empty() && p.ranks.is_empty());
    }
}
