use crate::error::{usage, Result};
use crate::model::{Crowding, Population};

/// Min-max normalized clustering features, one row per individual:
/// decision coordinates, then rank, then crowding.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMatrix {
    pub rows: Vec<Vec<f64>>,
    /// Per-column minimum before normalization.
    pub lower: Vec<f64>,
    /// Per-column maximum before normalization.
    pub upper: Vec<f64>,
}

impl FeatureMatrix {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Scales each column of `rows` to `[0, 1]` in place; constant columns become 0.
pub(crate) fn normalize_columns(rows: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut lower = vec![f64::INFINITY; width];
    let mut upper = vec![f64::NEG_INFINITY; width];
    for row in rows.iter() {
        for (c, v) in row.iter().enumerate() {
            lower[c] = lower[c].min(*v);
            upper[c] = upper[c].max(*v);
        }
    }
    for row in rows.iter_mut() {
        for (c, v) in row.iter_mut().enumerate() {
            let range = upper[c] - lower[c];
            *v = if range > 0.0 {
                (*v - lower[c]) / range
            } else {
                0.0
            };
        }
    }
    (lower, upper)
}

/// Builds the clustering features of a ranked population.
///
/// Infinite crowding is replaced by twice the largest finite crowding (or 1
/// when that is 0) before normalization. If every member is a boundary
/// point the crowding column is all ones.
pub fn build_features(pop: &Population) -> Result<FeatureMatrix> {
    let mut crowding = Vec::with_capacity(pop.len());
    for m in &pop.members {
        match (m.rank, m.crowding) {
            (Some(_), Some(c)) => crowding.push(c),
            _ => return Err(usage("clustering features need ranks and crowding")),
        }
    }
    let max_finite = crowding
        .iter()
        .filter_map(|c| c.finite())
        .fold(None, |acc: Option<f64>, v| {
            Some(acc.map_or(v, |a| a.max(v)))
        });
    let cap = match max_finite {
        Some(v) if v > 0.0 => 2.0 * v,
        _ => 1.0,
    };

    let mut rows: Vec<Vec<f64>> = pop
        .members
        .iter()
        .zip(&crowding)
        .map(|(m, c)| {
            let mut row = m.decision.to_vec();
            row.push(m.rank.unwrap_or(0) as f64);
            row.push(match c {
                Crowding::Finite(v) => *v,
                Crowding::Infinite => cap,
            });
            row
        })
        .collect();
    let (lower, upper) = normalize_columns(&mut rows);
    if max_finite.is_none() {
        if let Some(col) = rows.first().map(|r| r.len() - 1) {
            for row in &mut rows {
                row[col] = 1.0;
            }
        }
    }
    Ok(FeatureMatrix { rows, lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{DecisionVector, Individual, ObjectiveVector};

    fn member(x: &[f64], rank: usize, crowding: Crowding) -> Individual {
        Individual {
            decision: DecisionVector(x.to_vec()),
            objectives: ObjectiveVector(vec![0.0]),
            rank: Some(rank),
            crowding: Some(crowding),
        }
    }

    #[test]
    fn hand_normalized_matrix() {
        let pop = Population::new(
            vec![
                member(&[0.0, 5.0], 0, Crowding::Infinite),
                member(&[1.0, 5.0], 1, Crowding::Finite(0.5)),
                member(&[2.0, 5.0], 2, Crowding::Finite(0.25)),
            ],
            0,
        );
        let f = build_features(&pop).unwrap();
        // crowding column before scaling: [1.0, 0.5, 0.25]
        let want = [
            [0.0, 0.0, 0.0, 1.0],
            [0.5, 0.0, 0.5, 1.0 / 3.0],
            [1.0, 0.0, 1.0, 0.0],
        ];
        for (row, w) in f.rows.iter().zip(want) {
            for (a, b) in row.iter().zip(w) {
                assert!((a - b).abs() < 1e-15, "{row:?}");
            }
        }
    }

    #[test]
    fn all_boundary_members() {
        let pop = Population::new(
            vec![
                member(&[0.0], 0, Crowding::Infinite),
                member(&[1.0], 1, Crowding::Infinite),
            ],
            0,
        );
        let f = build_features(&pop).unwrap();
        assert_eq!(f.rows, vec![vec![0.0, 0.0, 1.0], vec![1.0, 1.0, 1.0]]);
    }

    #[test]
    fn unranked_population_is_rejected() {
        let mut m = member(&[0.0], 0, Crowding::Infinite);
        m.rank = None;
        assert!(build_features(&Population::new(vec![m], 0)).is_err());
    }
}
