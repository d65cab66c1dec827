//! CEC 2009 unconstrained test instances UF1-UF10.
//!
//! Variable indices in the formulas are 1-based; `j` below always refers to the
//! 1-based position of `x[j - 1]`.

use std::f64::consts::PI;

/// Accumulates per-objective sums of a term over the variable groups.
struct Groups {
    sums: Vec<f64>,
    counts: Vec<usize>,
    prods: Vec<f64>,
}

impl Groups {
    fn new(m: usize) -> Self {
        Self {
            sums: vec![0.0; m],
            counts: vec![0; m],
            prods: vec![1.0; m],
        }
    }

    fn mean_term(&self, k: usize) -> f64 {
        2.0 / self.counts[k] as f64 * self.sums[k]
    }

    /// `2/|J| * (4 sum y^2 - 2 prod cos(20 y pi / sqrt j) + 2)`, with the sums
    /// holding `y^2` and the products the cosines.
    fn rastrigin_term(&self, k: usize) -> f64 {
        2.0 / self.counts[k] as f64 * (4.0 * self.sums[k] - 2.0 * self.prods[k] + 2.0)
    }
}

/// Two-objective grouping: odd `j` feeds objective 1, even `j` objective 2.
fn two_obj_groups(x: &[f64], mut term: impl FnMut(usize, f64) -> (f64, f64)) -> Groups {
    let mut g = Groups::new(2);
    for (idx, &v) in x.iter().enumerate().skip(1) {
        let j = idx + 1;
        let k = if j % 2 == 1 { 0 } else { 1 };
        let (s, p) = term(j, v);
        g.sums[k] += s;
        g.prods[k] *= p;
        g.counts[k] += 1;
    }
    g
}

/// Three-objective grouping for UF8-UF10: `j - 1`, `j - 2`, `j` multiples of 3.
fn three_obj_groups(x: &[f64], mut term: impl FnMut(usize, f64) -> f64) -> Groups {
    let mut g = Groups::new(3);
    for (idx, &v) in x.iter().enumerate().skip(2) {
        let j = idx + 1;
        let k = match j % 3 {
            1 => 0,
            2 => 1,
            _ => 2,
        };
        g.sums[k] += term(j, v);
        g.counts[k] += 1;
    }
    g
}

fn sine_shift(x1: f64, j: usize, n: usize) -> f64 {
    (6.0 * PI * x1 + j as f64 * PI / n as f64).sin()
}

pub(super) fn uf1(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let g = two_obj_groups(x, |j, v| ((v - sine_shift(x1, j, n)).powi(2), 1.0));
    vec![x1 + g.mean_term(0), 1.0 - x1.sqrt() + g.mean_term(1)]
}

pub(super) fn uf2_target(x1: f64, j: usize, n: usize) -> f64 {
    let angle = 6.0 * PI * x1 + j as f64 * PI / n as f64;
    let amp = 0.3 * x1 * x1 * (24.0 * PI * x1 + 4.0 * j as f64 * PI / n as f64).cos() + 0.6 * x1;
    if j % 2 == 1 {
        amp * angle.cos()
    } else {
        amp * angle.sin()
    }
}

pub(super) fn uf2(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let g = two_obj_groups(x, |j, v| ((v - uf2_target(x1, j, n)).powi(2), 1.0));
    vec![x1 + g.mean_term(0), 1.0 - x1.sqrt() + g.mean_term(1)]
}

pub(super) fn uf3_target(x1: f64, j: usize, n: usize) -> f64 {
    x1.powf(0.5 * (1.0 + 3.0 * (j as f64 - 2.0) / (n as f64 - 2.0)))
}

pub(super) fn uf3(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let g = two_obj_groups(x, |j, v| {
        let y = v - uf3_target(x1, j, n);
        (y * y, (20.0 * y * PI / (j as f64).sqrt()).cos())
    });
    vec![
        x1 + g.rastrigin_term(0),
        1.0 - x1.sqrt() + g.rastrigin_term(1),
    ]
}

pub(super) fn uf4(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let g = two_obj_groups(x, |j, v| {
        let y = (v - sine_shift(x1, j, n)).abs();
        (y / (1.0 + (2.0 * y).exp()), 1.0)
    });
    vec![x1 + g.mean_term(0), 1.0 - x1 * x1 + g.mean_term(1)]
}

pub(super) const UF5_N: usize = 10;
const UF_EPSILON: f64 = 0.1;

pub(super) fn uf5(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let big_n = UF5_N as f64;
    let g = two_obj_groups(x, |j, v| {
        let y = v - sine_shift(x1, j, n);
        (2.0 * y * y - (4.0 * PI * y).cos() + 1.0, 1.0)
    });
    let h = (0.5 / big_n + UF_EPSILON) * (2.0 * big_n * PI * x1).sin().abs();
    vec![x1 + h + g.mean_term(0), 1.0 - x1 + h + g.mean_term(1)]
}

pub(super) const UF6_N: usize = 2;

pub(super) fn uf6(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let big_n = UF6_N as f64;
    let g = two_obj_groups(x, |j, v| {
        let y = v - sine_shift(x1, j, n);
        (y * y, (20.0 * y * PI / (j as f64).sqrt()).cos())
    });
    let h = (2.0 * (0.5 / big_n + UF_EPSILON) * (2.0 * big_n * PI * x1).sin()).max(0.0);
    vec![
        x1 + h + g.rastrigin_term(0),
        1.0 - x1 + h + g.rastrigin_term(1),
    ]
}

pub(super) fn uf7(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let x1 = x[0];
    let g = two_obj_groups(x, |j, v| ((v - sine_shift(x1, j, n)).powi(2), 1.0));
    let r = x1.powf(0.2);
    vec![r + g.mean_term(0), 1.0 - r + g.mean_term(1)]
}

pub(super) fn three_obj_target(x1: f64, x2: f64, j: usize, n: usize) -> f64 {
    2.0 * x2 * (2.0 * PI * x1 + j as f64 * PI / n as f64).sin()
}

pub(super) fn uf8(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let (x1, x2) = (x[0], x[1]);
    let g = three_obj_groups(x, |j, v| (v - three_obj_target(x1, x2, j, n)).powi(2));
    let (a, b) = (0.5 * PI * x1, 0.5 * PI * x2);
    vec![
        a.cos() * b.cos() + g.mean_term(0),
        a.cos() * b.sin() + g.mean_term(1),
        a.sin() + g.mean_term(2),
    ]
}

pub(super) fn uf9(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let (x1, x2) = (x[0], x[1]);
    let g = three_obj_groups(x, |j, v| (v - three_obj_target(x1, x2, j, n)).powi(2));
    let bump = ((1.0 + UF_EPSILON) * (1.0 - 4.0 * (2.0 * x1 - 1.0).powi(2))).max(0.0);
    vec![
        0.5 * (bump + 2.0 * x1) * x2 + g.mean_term(0),
        0.5 * (bump - 2.0 * x1 + 2.0) * x2 + g.mean_term(1),
        1.0 - x2 + g.mean_term(2),
    ]
}

pub(super) fn uf10(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let (x1, x2) = (x[0], x[1]);
    let g = three_obj_groups(x, |j, v| {
        let y = v - three_obj_target(x1, x2, j, n);
        4.0 * y * y - (8.0 * PI * y).cos() + 1.0
    });
    let (a, b) = (0.5 * PI * x1, 0.5 * PI * x2);
    vec![
        a.cos() * b.cos() + g.mean_term(0),
        a.cos() * b.sin() + g.mean_term(1),
        a.sin() + g.mean_term(2),
    ]
}

pub(super) fn uf1_target(x1: f64, j: usize, n: usize) -> f64 {
    sine_shift(x1, j, n)
}
