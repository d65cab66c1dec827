use serde::{Deserialize, Serialize};

use super::array::construct_orthogonal_array;
use crate::error::{usage, Result};
use crate::model::{Bounds, DecisionVector};

/// Parameters of the similarity-driven orthogonal crossover.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SocParams {
    /// Number of levels per factor; must be prime.
    pub q_levels: usize,
    /// Per-dimension similarity threshold. Parent components further apart
    /// than this become factors of the orthogonal design.
    pub theta0: Vec<f64>,
}

impl SocParams {
    pub fn new(q_levels: usize, theta0: Vec<f64>) -> Self {
        Self { q_levels, theta0 }
    }

    /// Thresholds proportional to each dimension's width.
    pub fn relative(q_levels: usize, bounds: &Bounds, rel: f64) -> Self {
        let theta0 = (0..bounds.len()).map(|i| rel * bounds.width(i)).collect();
        Self { q_levels, theta0 }
    }
}

/// Crosses two parents with an orthogonal design over the dimensions where
/// they differ by more than `theta0`.
///
/// Each such dimension is one factor whose `Q` levels evenly span the parents'
/// interval on that dimension. Dimensions where the parents agree take the
/// midpoint. With no differing dimension the parents themselves are returned.
/// The output depends only on the per-dimension minimum and maximum, so
/// swapping parents (or swapping any single component between them) leaves
/// it unchanged.
pub fn soc_crossover(p1: &[f64], p2: &[f64], params: &SocParams) -> Result<Vec<DecisionVector>> {
    if p1.len() != p2.len() || p1.len() != params.theta0.len() {
        return Err(usage(format!(
            "crossover length mismatch: parents {} and {}, thresholds {}",
            p1.len(),
            p2.len(),
            params.theta0.len()
        )));
    }
    let q = params.q_levels;
    if q < 2 {
        return Err(usage(format!("crossover needs at least 2 levels, got {q}")));
    }

    let lo: Vec<f64> = p1.iter().zip(p2).map(|(a, b)| a.min(*b)).collect();
    let hi: Vec<f64> = p1.iter().zip(p2).map(|(a, b)| a.max(*b)).collect();
    let factors: Vec<usize> = (0..p1.len())
        .filter(|&i| hi[i] - lo[i] > params.theta0[i])
        .collect();
    if factors.is_empty() {
        return Ok(vec![p1.to_vec().into(), p2.to_vec().into()]);
    }

    let base: Vec<f64> = lo.iter().zip(&hi).map(|(l, h)| 0.5 * (l + h)).collect();
    let oa = construct_orthogonal_array(q, factors.len())?;
    let level_value = |dim: usize, level: u32| {
        if level as usize == q {
            hi[dim]
        } else {
            lo[dim] + (level - 1) as f64 * (hi[dim] - lo[dim]) / (q - 1) as f64
        }
    };
    Ok(oa
        .iter_rows()
        .map(|row| {
            let mut child = base.clone();
            for (&dim, &level) in factors.iter().zip(row) {
                child[dim] = level_value(dim, level);
            }
            DecisionVector(child)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn identical_parents_are_returned() {
        let p = [0.3, 0.4];
        let params = SocParams::new(3, vec![1e-4; 2]);
        let kids = soc_crossover(&p, &p, &params).unwrap();
        assert_eq!(
            kids,
            vec![DecisionVector(p.to_vec()), DecisionVector(p.to_vec())]
        );
    }

    #[test]
    fn one_differing_dimension() {
        let params = SocParams::new(3, vec![1e-4; 2]);
        let kids = soc_crossover(&[0.0, 0.5], &[1.0, 0.5], &params).unwrap();
        let got: Vec<Vec<f64>> = kids.into_iter().map(|k| k.0).collect();
        assert_eq!(got, vec![vec![0.0, 0.5], vec![0.5, 0.5], vec![1.0, 0.5]]);
    }

    #[test]
    fn all_dimensions_differ() {
        let params = SocParams::new(3, vec![1e-4; 4]);
        let kids = soc_crossover(&[0.0; 4], &[1.0; 4], &params).unwrap();
        assert_eq!(kids.len(), 9);
        for k in &kids {
            assert!(k.iter().all(|v| [0.0, 0.5, 1.0].contains(v)));
        }
    }

    fn parents() -> impl Strategy<Value = (Vec<f64>, Vec<f64>, Vec<bool>)> {
        (1usize..7).prop_flat_map(|n| {
            (
                prop::collection::vec(-2.0f64..2.0, n),
                prop::collection::vec(-2.0f64..2.0, n),
                prop::collection::vec(any::<bool>(), n),
            )
        })
    }

    proptest! {
        #[test]
        fn covariant_under_component_swaps((a, b, swap) in parents()) {
            let params = SocParams::new(3, vec![1e-3; a.len()]);
            let mut a2 = a.clone();
            let mut b2 = b.clone();
            for (i, s) in swap.iter().enumerate() {
                if *s {
                    std::mem::swap(&mut a2[i], &mut b2[i]);
                }
            }
            let base = soc_crossover(&a, &b, &params).unwrap();
            let swapped = soc_crossover(&b2, &a2, &params).unwrap();
            let distinct = a.iter().zip(&b).any(|(x, y)| (x - y).abs() > 1e-3);
            if distinct {
                prop_assert_eq!(&base, &swapped);
            }
            for child in &base {
                for i in 0..a.len() {
                    prop_assert!(child[i] >= a[i].min(b[i]) && child[i] <= a[i].max(b[i]));
                }
            }
        }
    }
}
