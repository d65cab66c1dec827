//! The ZDT problems (two objectives).

use std::f64::consts::PI;

fn linear_g(x: &[f64]) -> f64 {
    1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64
}

pub(super) fn zdt1(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = linear_g(x);
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

pub(super) fn zdt2(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = linear_g(x);
    vec![f1, g * (1.0 - (f1 / g).powi(2))]
}

pub(super) fn zdt3(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = linear_g(x);
    let r = f1 / g;
    vec![f1, g * (1.0 - r.sqrt() - r * (10.0 * PI * f1).sin())]
}

pub(super) fn zdt4(x: &[f64]) -> Vec<f64> {
    let f1 = x[0];
    let g = 1.0
        + 10.0 * (x.len() - 1) as f64
        + x[1..]
            .iter()
            .map(|v| v * v - 10.0 * (4.0 * PI * v).cos())
            .sum::<f64>();
    vec![f1, g * (1.0 - (f1 / g).sqrt())]
}

fn zdt6_f1(x1: f64) -> f64 {
    1.0 - (-4.0 * x1).exp() * (6.0 * PI * x1).sin().powi(6)
}

pub(super) fn zdt6(x: &[f64]) -> Vec<f64> {
    let f1 = zdt6_f1(x[0]);
    let g = 1.0 + 9.0 * (x[1..].iter().sum::<f64>() / (x.len() - 1) as f64).powf(0.25);
    vec![f1, g * (1.0 - (f1 / g).powi(2))]
}

/// Pareto-optimal decision intervals for `x1` on ZDT3.
///
/// Left ends of the later intervals are moved inward by 1e-7 so that no sampled
/// point ties with the local minimum that closes the preceding interval.
pub(super) const ZDT3_INTERVALS: [(f64, f64); 5] = [
    (0.0, 0.083_001_534_9),
    (0.182_228_828, 0.257_762_363_4),
    (0.409_313_774_8, 0.453_882_104_1),
    (0.618_396_894_4, 0.652_511_703_8),
    (0.823_331_898_3, 0.851_832_865_4),
];

/// `(argmin, min)` of ZDT6's first objective over the monotone branch near 1/12.
pub(super) fn zdt6_f1_minimum() -> (f64, f64) {
    let (mut lo, mut hi) = (0.05, 0.12);
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if zdt6_f1(m1) < zdt6_f1(m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, zdt6_f1(x))
}

/// Preimage in `[0, argmin]` of a target first-objective value, by bisection
/// on the decreasing branch.
pub(super) fn zdt6_x1_for(f1: f64, argmin: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, argmin);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if zdt6_f1(mid) > f1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
