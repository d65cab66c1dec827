//! The SCH, FON, POL and KUR problems.

pub(super) fn sch(x: &[f64]) -> Vec<f64> {
    let v = x[0];
    vec![v * v, (v - 2.0) * (v - 2.0)]
}

pub(super) fn fon(x: &[f64]) -> Vec<f64> {
    let c = 1.0 / (x.len() as f64).sqrt();
    let (mut s1, mut s2) = (0.0, 0.0);
    for &v in x {
        s1 += (v - c) * (v - c);
        s2 += (v + c) * (v + c);
    }
    vec![1.0 - (-s1).exp(), 1.0 - (-s2).exp()]
}

fn pol_terms(x1: f64, x2: f64) -> (f64, f64) {
    let b1 = 0.5 * x1.sin() - 2.0 * x1.cos() + x2.sin() - 1.5 * x2.cos();
    let b2 = 1.5 * x1.sin() - x1.cos() + 2.0 * x2.sin() - 0.5 * x2.cos();
    (b1, b2)
}

pub(super) fn pol(x: &[f64]) -> Vec<f64> {
    let (a1, a2) = pol_terms(1.0, 2.0);
    let (b1, b2) = pol_terms(x[0], x[1]);
    vec![
        1.0 + (a1 - b1).powi(2) + (a2 - b2).powi(2),
        (x[0] + 3.0).powi(2) + (x[1] + 1.0).powi(2),
    ]
}

pub(super) fn kur(x: &[f64]) -> Vec<f64> {
    let f1 = x
        .windows(2)
        .map(|w| -10.0 * (-0.2 * (w[0] * w[0] + w[1] * w[1]).sqrt()).exp())
        .sum();
    let f2 = x
        .iter()
        .map(|v| v.abs().powf(0.8) + 5.0 * (v * v * v).sin())
        .sum();
    vec![f1, f2]
}

/// SCH front parameterized by the optimal decision value `2t`, t in [0, 1].
pub(super) fn sch_front(t: f64) -> (Vec<f64>, Vec<f64>) {
    let x = 2.0 * t;
    let f1 = x * x;
    let f2 = (f1.sqrt() - 2.0).powi(2);
    (vec![f1, f2], vec![x])
}

/// FON front: all three coordinates equal to `s` in [-1/sqrt(3), 1/sqrt(3)].
pub(super) fn fon_front(t: f64, n: usize) -> (Vec<f64>, Vec<f64>) {
    let c = 1.0 / (n as f64).sqrt();
    let s = -c + 2.0 * c * t;
    let n = n as f64;
    let f1 = 1.0 - (-n * (s - c) * (s - c)).exp();
    let f2 = 1.0 - (-n * (s + c) * (s + c)).exp();
    (vec![f1, f2], vec![s; n as usize])
}
