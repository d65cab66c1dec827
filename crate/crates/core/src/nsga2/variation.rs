use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::model::{Bounds, DecisionVector};

/// Genes closer than this are treated as equal and never recombined.
const SBX_EPS: f64 = 1e-14;

/// Operator settings for simulated binary crossover and polynomial mutation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariationParams {
    /// Probability that a parent pair is recombined.
    pub p_crossover: f64,
    /// Probability that a child enters mutation at all.
    pub p_mutation: f64,
    pub eta_c: f64,
    pub eta_m: f64,
}

impl Default for VariationParams {
    fn default() -> Self {
        Self {
            p_crossover: 0.9,
            p_mutation: 0.1,
            eta_c: 20.0,
            eta_m: 20.0,
        }
    }
}

impl VariationParams {
    pub fn validate(&self) -> Result<()> {
        for (name, p) in [
            ("p_crossover", self.p_crossover),
            ("p_mutation", self.p_mutation),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(usage(format!("{name} must lie in [0, 1], got {p}")));
            }
        }
        for (name, eta) in [("eta_c", self.eta_c), ("eta_m", self.eta_m)] {
            if !(eta.is_finite() && eta >= 0.0) {
                return Err(usage(format!(
                    "{name} must be a non-negative number, got {eta}"
                )));
            }
        }
        Ok(())
    }
}

/// Simulated binary crossover followed by clamping to `bounds`.
///
/// One draw decides whether the pair is recombined. Each gene then takes one
/// draw to decide whether it participates and, if so and the parents differ,
/// one draw for the spread factor and one that swaps the two child values
/// with probability 1/2.
pub fn sbx_crossover<R: Rng + ?Sized>(
    p1: &[f64],
    p2: &[f64],
    params: &VariationParams,
    bounds: &Bounds,
    rng: &mut R,
) -> (DecisionVector, DecisionVector) {
    let mut c1 = p1.to_vec();
    let mut c2 = p2.to_vec();
    if rng.random::<f64>() < params.p_crossover {
        let exponent = 1.0 / (params.eta_c + 1.0);
        for i in 0..c1.len() {
            if rng.random::<f64>() > 0.5 {
                continue;
            }
            let (y1, y2) = (p1[i], p2[i]);
            if (y1 - y2).abs() <= SBX_EPS {
                continue;
            }
            let u: f64 = rng.random();
            let beta = if u <= 0.5 {
                (2.0 * u).powf(exponent)
            } else {
                (1.0 / (2.0 * (1.0 - u))).powf(exponent)
            };
            let mid = 0.5 * (y1 + y2);
            let half = 0.5 * beta * (y2 - y1);
            let (a, b) = (mid - half, mid + half);
            if rng.random::<f64>() < 0.5 {
                (c1[i], c2[i]) = (b, a);
            } else {
                (c1[i], c2[i]) = (a, b);
            }
        }
    }
    bounds.clamp_in_place(&mut c1);
    bounds.clamp_in_place(&mut c2);
    (DecisionVector(c1), DecisionVector(c2))
}

/// Bounded polynomial mutation.
///
/// One draw gates the whole individual with probability `p_mutation`. A gated
/// individual mutates each gene with probability `1/N`, taking one draw for
/// the decision and one for the perturbation.
pub fn polynomial_mutation<R: Rng + ?Sized>(
    x: &[f64],
    params: &VariationParams,
    bounds: &Bounds,
    rng: &mut R,
) -> DecisionVector {
    let mut y = x.to_vec();
    if rng.random::<f64>() >= params.p_mutation {
        return DecisionVector(y);
    }
    let per_gene = 1.0 / y.len() as f64;
    let exponent = 1.0 / (params.eta_m + 1.0);
    for (i, v) in y.iter_mut().enumerate() {
        if rng.random::<f64>() >= per_gene {
            continue;
        }
        let (lo, hi) = (bounds.lower()[i], bounds.upper()[i]);
        let width = hi - lo;
        let r: f64 = rng.random();
        let delta_q = if r < 0.5 {
            let xy = 1.0 - (*v - lo) / width;
            let val = 2.0 * r + (1.0 - 2.0 * r) * xy.powf(params.eta_m + 1.0);
            val.powf(exponent) - 1.0
        } else {
            let xy = 1.0 - (hi - *v) / width;
            let val = 2.0 * (1.0 - r) + 2.0 * (r - 0.5) * xy.powf(params.eta_m + 1.0);
            1.0 - val.powf(exponent)
        };
        *v = (*v + delta_q * width).clamp(lo, hi);
    }
    DecisionVector(y)
}
