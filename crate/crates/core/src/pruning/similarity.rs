use super::features::normalize_columns;
use crate::model::Population;

/// Pairwise similarities `p_ij = 1 - e_ij / e_max` of a population, where
/// `e_ij` is the Euclidean distance between min-max normalized
/// (decision, objective) vectors and `e_max` the largest such distance.
/// A population with `e_max = 0` has every similarity equal to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityMatrix {
    n: usize,
    values: Vec<f64>,
}

impl SimilarityMatrix {
    pub fn from_population(pop: &Population) -> Self {
        let mut rows: Vec<Vec<f64>> = pop
            .members
            .iter()
            .map(|m| {
                m.decision
                    .iter()
                    .chain(m.objectives.iter())
                    .copied()
                    .collect()
            })
            .collect();
        normalize_columns(&mut rows);
        let n = rows.len();
        let mut values = vec![0.0; n * n];
        let mut e_max: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let e = rows[i]
                    .iter()
                    .zip(&rows[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                values[i * n + j] = e;
                values[j * n + i] = e;
                e_max = e_max.max(e);
            }
        }
        for v in values.iter_mut() {
            *v = if e_max > 0.0 { 1.0 - *v / e_max } else { 1.0 };
        }
        Self { n, values }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }
}

/// Similarity of members `i` and `j` of `pop`. Builds the whole matrix, so
/// prefer [`SimilarityMatrix`] when many pairs are needed.
pub fn pairwise_similarity(i: usize, j: usize, pop: &Population) -> f64 {
    SimilarityMatrix::from_population(pop).get(i, j)
}

/// Mean similarity over all unordered pairs of `members`; 0 for a singleton.
pub fn intra_class_similarity(members: &[usize], sim: &SimilarityMatrix) -> f64 {
    let m = members.len();
    if m < 2 {
        return 0.0;
    }
    let mut total = 0.0;
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            total += sim.get(i, j);
        }
    }
    (total / (m * (m - 1) / 2) as f64).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{DecisionVector, Individual, ObjectiveVector};

    fn pop(points: &[(f64, f64)]) -> Population {
        Population::new(
            points
                .iter()
                .map(|&(x, f)| Individual::new(DecisionVector(vec![x]), ObjectiveVector(vec![f])))
                .collect(),
            0,
        )
    }

    #[test]
    fn collinear_points() {
        let p = pop(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]);
        let s = SimilarityMatrix::from_population(&p);
        assert!((s.get(1, 0) - 0.5).abs() < 1e-15);
        assert!((s.get(1, 2) - 0.5).abs() < 1e-15);
        assert_eq!(s.get(0, 2), 0.0);
        assert_eq!(s.get(0, 1), s.get(1, 0));
    }

    #[test]
    fn duplicates_and_degenerate_population() {
        let p = pop(&[(0.0, 0.0), (0.0, 0.0), (3.0, 1.0)]);
        assert_eq!(pairwise_similarity(0, 1, &p), 1.0);
        let same = pop(&[(1.0, 1.0), (1.0, 1.0)]);
        assert_eq!(pairwise_similarity(0, 1, &same), 1.0);
    }

    #[test]
    fn class_average() {
        let p = pop(&[(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)]);
        let s = SimilarityMatrix::from_population(&p);
        assert!((intra_class_similarity(&[0, 1, 2], &s) - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(intra_class_similarity(&[2], &s), 0.0);
        assert_eq!(intra_class_similarity(&[0, 2], &s), 0.0);
    }
}
