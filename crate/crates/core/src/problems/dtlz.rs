//! The DTLZ problems, three objectives.
//!
//! `x` holds `M - 1` position variables followed by the `k` distance variables.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

const M: usize = 3;

fn rastrigin_g(tail: &[f64]) -> f64 {
    100.0
        * (tail.len() as f64
            + tail
                .iter()
                .map(|v| (v - 0.5).powi(2) - (20.0 * PI * (v - 0.5)).cos())
                .sum::<f64>())
}

fn sphere_g(tail: &[f64]) -> f64 {
    tail.iter().map(|v| (v - 0.5).powi(2)).sum()
}

/// Objectives on the unit sphere scaled by `1 + g`, from the two angles.
fn spherical(theta: [f64; 2], g: f64) -> Vec<f64> {
    let r = 1.0 + g;
    vec![
        r * theta[0].cos() * theta[1].cos(),
        r * theta[0].cos() * theta[1].sin(),
        r * theta[0].sin(),
    ]
}

pub(super) fn dtlz1(x: &[f64]) -> Vec<f64> {
    let g = rastrigin_g(&x[M - 1..]);
    let s = 0.5 * (1.0 + g);
    vec![s * x[0] * x[1], s * x[0] * (1.0 - x[1]), s * (1.0 - x[0])]
}

pub(super) fn dtlz2(x: &[f64]) -> Vec<f64> {
    let g = sphere_g(&x[M - 1..]);
    spherical([x[0] * FRAC_PI_2, x[1] * FRAC_PI_2], g)
}

pub(super) fn dtlz3(x: &[f64]) -> Vec<f64> {
    let g = rastrigin_g(&x[M - 1..]);
    spherical([x[0] * FRAC_PI_2, x[1] * FRAC_PI_2], g)
}

pub(super) const DTLZ4_ALPHA: i32 = 100;

pub(super) fn dtlz4(x: &[f64]) -> Vec<f64> {
    let g = sphere_g(&x[M - 1..]);
    spherical(
        [
            x[0].powi(DTLZ4_ALPHA) * FRAC_PI_2,
            x[1].powi(DTLZ4_ALPHA) * FRAC_PI_2,
        ],
        g,
    )
}

fn degenerate(x: &[f64], g: f64) -> Vec<f64> {
    let theta2 = PI / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[1]);
    spherical([x[0] * FRAC_PI_2, theta2], g)
}

pub(super) fn dtlz5(x: &[f64]) -> Vec<f64> {
    degenerate(x, sphere_g(&x[M - 1..]))
}

pub(super) fn dtlz6(x: &[f64]) -> Vec<f64> {
    degenerate(x, x[M - 1..].iter().map(|v| v.powf(0.1)).sum())
}

pub(super) fn dtlz7(x: &[f64]) -> Vec<f64> {
    let tail = &x[M - 1..];
    let g = 1.0 + 9.0 * tail.iter().sum::<f64>() / tail.len() as f64;
    let h = M as f64
        - x[..M - 1]
            .iter()
            .map(|f| f / (1.0 + g) * (1.0 + (3.0 * PI * f).sin()))
            .sum::<f64>();
    vec![x[0], x[1], (1.0 + g) * h]
}

/// Pareto-optimal intervals of each position variable on DTLZ7.
pub(super) const DTLZ7_INTERVALS: [(f64, f64); 2] =
    [(0.0, 0.251_411_836), (0.631_626_630_7, 0.859_400_856_6)];

pub(super) fn sphere_point(u: f64, v: f64) -> Vec<f64> {
    spherical([u * FRAC_PI_2, v * FRAC_PI_2], 0.0)
}

pub(super) fn degenerate_point(t: f64) -> Vec<f64> {
    spherical([t * FRAC_PI_2, FRAC_PI_4], 0.0)
}
