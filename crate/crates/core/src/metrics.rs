//! Convergence and diversity indicators against a reference front.
//!
//! All sums run in input order so results are bit-reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};

/// Indicator values of one point set against one reference front.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndicatorReport {
    pub gd: f64,
    pub sp: f64,
    pub igd: f64,
    pub n_points: usize,
    pub reference_id: String,
}

fn check_sets<A: AsRef<[f64]>, P: AsRef<[f64]>>(a: &[A], p: &[P], what: &str) -> Result<usize> {
    if a.is_empty() || p.is_empty() {
        return Err(usage(format!(
            "{what}: point set and reference must be nonempty"
        )));
    }
    let m = p[0].as_ref().len();
    if a.iter().any(|x| x.as_ref().len() != m) || p.iter().any(|x| x.as_ref().len() != m) {
        return Err(usage(format!("{what}: inconsistent objective counts")));
    }
    Ok(m)
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Generational distance `sqrt(sum d_i^2) / n`, with `d_i` the Euclidean
/// distance from the i-th point of `a` to its nearest reference point.
pub fn gd<A: AsRef<[f64]>, P: AsRef<[f64]>>(a: &[A], p: &[P]) -> Result<f64> {
    check_sets(a, p, "GD")?;
    let total: f64 = a
        .iter()
        .map(|x| {
            p.iter()
                .map(|r| squared_distance(x.as_ref(), r.as_ref()))
                .fold(f64::INFINITY, f64::min)
        })
        .sum();
    Ok(total.sqrt() / a.len() as f64)
}

/// Spacing: sample standard deviation of each point's L1 distance to its
/// nearest other point.
pub fn sp<A: AsRef<[f64]>>(a: &[A]) -> Result<f64> {
    if a.len() < 2 {
        return Err(usage(format!(
            "SP needs at least 2 points, got {}",
            a.len()
        )));
    }
    let m = a[0].as_ref().len();
    if a.iter().any(|x| x.as_ref().len() != m) {
        return Err(usage("SP: inconsistent objective counts"));
    }
    let d: Vec<f64> = (0..a.len())
        .map(|i| {
            (0..a.len())
                .filter(|&j| j != i)
                .map(|j| {
                    a[i].as_ref()
                        .iter()
                        .zip(a[j].as_ref())
                        .map(|(x, y)| (x - y).abs())
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let mean = d.iter().sum::<f64>() / d.len() as f64;
    let var = d.iter().map(|di| (mean - di) * (mean - di)).sum::<f64>() / (d.len() - 1) as f64;
    Ok(var.sqrt())
}

/// Inverted generational distance: mean over reference points of the
/// distance to the nearest point of `a`, each objective scaled by the
/// reference front's range. Objectives with zero range contribute nothing.
pub fn igd<A: AsRef<[f64]>, P: AsRef<[f64]>>(a: &[A], p: &[P]) -> Result<f64> {
    let m = check_sets(a, p, "IGD")?;
    let mut scale = vec![0.0; m];
    for (k, s) in scale.iter_mut().enumerate() {
        let (lo, hi) = p
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r.as_ref()[k]), hi.max(r.as_ref()[k]))
            });
        if hi > lo {
            *s = 1.0 / (hi - lo);
        }
    }
    let total: f64 = p
        .iter()
        .map(|r| {
            a.iter()
                .map(|x| {
                    r.as_ref()
                        .iter()
                        .zip(x.as_ref())
                        .zip(&scale)
                        .map(|((u, v), s)| {
                            let t = (u - v) * s;
                            t * t
                        })
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .sum();
    Ok(total / p.len() as f64)
}

/// All three indicators for `a` against `p`.
pub fn indicator_report<A: AsRef<[f64]>, P: AsRef<[f64]>>(
    a: &[A],
    p: &[P],
    reference_id: &str,
) -> Result<IndicatorReport> {
    Ok(IndicatorReport {
        gd: gd(a, p)?,
        sp: sp(a)?,
        igd: igd(a, p)?,
        n_points: a.len(),
        reference_id: reference_id.to_string(),
    })
}
