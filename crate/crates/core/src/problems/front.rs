//! True Pareto-front samples used as indicator references.
//!
//! Analytic fronts are sampled uniformly in their natural parameterization
//! (one or two parameters). POL and KUR have no closed form; their references
//! are dense-grid brute-force fronts bundled as text files under `data/`.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::classic;
use super::{dtlz, uf, zdt, Benchmark, ProblemSpec};
use crate::error::{usage, Error, Result};
use crate::model::{compare, DecisionVector, Dominance, ObjectiveVector};

const POL_FRONT: &str = include_str!("../../data/pol.front");
const KUR_FRONT: &str = include_str!("../../data/kur.front");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrontSource {
    Analytic,
    File,
}

/// Points on (or approximating) the true Pareto front of a problem.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrontSample {
    pub points: Vec<ObjectiveVector>,
    pub source: FrontSource,
}

impl FrontSample {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Samples `count` reference points from the true front of `name`.
///
/// UF5's front is a set of 21 isolated points, so at most 21 are returned for it.
/// File-backed fronts return at most as many points as the file holds.
pub fn sample_true_front(name: &str, count: usize) -> Result<FrontSample> {
    sample_true_front_in(name, count, None)
}

/// Like [`sample_true_front`], but reads POL/KUR references from
/// `<dir>/<name lowercase>.front` when `data_dir` is given.
pub fn sample_true_front_in(
    name: &str,
    count: usize,
    data_dir: Option<&Path>,
) -> Result<FrontSample> {
    if count < 2 {
        return Err(usage(format!(
            "front sample needs at least 2 points, got {count}"
        )));
    }
    let b: Benchmark = name.parse()?;
    if b.has_analytic_front() {
        let points = analytic_front(b, count)
            .into_iter()
            .map(|(f, _)| ObjectiveVector(f))
            .collect();
        return Ok(FrontSample {
            points,
            source: FrontSource::Analytic,
        });
    }
    let full = match data_dir {
        Some(dir) => read_front_file(&dir.join(format!("{}.front", b.name().to_lowercase())))?,
        None => {
            let text = if b == Benchmark::Pol {
                POL_FRONT
            } else {
                KUR_FRONT
            };
            read_front(text)?
        }
    };
    if full.points[0].len() != b.n_objectives() {
        return Err(Error::Config(format!(
            "{} reference front has {} objectives, expected {}",
            b,
            full.points[0].len(),
            b.n_objectives()
        )));
    }
    Ok(FrontSample {
        points: thin_evenly(full.points, count),
        source: FrontSource::File,
    })
}

/// Front points paired with a decision vector that maps onto each of them.
pub fn analytic_front_with_preimages(
    name: &str,
    count: usize,
) -> Result<Vec<(ObjectiveVector, DecisionVector)>> {
    let b: Benchmark = name.parse()?;
    if !b.has_analytic_front() {
        return Err(usage(format!("{b} has no analytic front")));
    }
    if count < 2 {
        return Err(usage("front sample needs at least 2 points"));
    }
    Ok(analytic_front(b, count)
        .into_iter()
        .map(|(f, x)| (ObjectiveVector(f), DecisionVector(x)))
        .collect())
}

fn radical_inverse_base2(mut i: usize) -> f64 {
    let mut inv = 0.5;
    let mut r = 0.0;
    while i > 0 {
        if i & 1 == 1 {
            r += inv;
        }
        inv *= 0.5;
        i >>= 1;
    }
    r
}

/// Evenly spaced parameter values in [0, 1], endpoints included.
fn grid_1d(count: usize) -> impl Iterator<Item = f64> {
    (0..count).map(move |i| i as f64 / (count - 1) as f64)
}

/// Hammersley point set on the unit square.
fn grid_2d(count: usize) -> impl Iterator<Item = (f64, f64)> {
    (0..count).map(move |i| (i as f64 / (count - 1) as f64, radical_inverse_base2(i)))
}

/// Maps t in [0, 1] onto a union of disjoint intervals, proportionally to length.
fn onto_intervals(t: f64, intervals: &[(f64, f64)]) -> f64 {
    let total: f64 = intervals.iter().map(|(a, b)| b - a).sum();
    let mut rest = t * total;
    for &(a, b) in intervals {
        let w = b - a;
        if rest <= w {
            return a + rest;
        }
        rest -= w;
    }
    intervals[intervals.len() - 1].1
}

fn with_tail(head: &[f64], n: usize, tail: impl Fn(usize) -> f64) -> Vec<f64> {
    let mut x = head.to_vec();
    x.extend((head.len()..n).map(|idx| tail(idx + 1)));
    x
}

type FrontPoint = (Vec<f64>, Vec<f64>);

fn analytic_front(b: Benchmark, count: usize) -> Vec<FrontPoint> {
    use Benchmark::*;
    let n = b.n_vars();
    let pts: Vec<FrontPoint> = match b {
        Sch => grid_1d(count).map(classic::sch_front).collect(),
        Fon => grid_1d(count).map(|t| classic::fon_front(t, n)).collect(),
        Zdt1 | Zdt4 => grid_1d(count)
            .map(|t| (vec![t, 1.0 - t.sqrt()], with_tail(&[t], n, |_| 0.0)))
            .collect(),
        Zdt2 => grid_1d(count)
            .map(|t| (vec![t, 1.0 - t * t], with_tail(&[t], n, |_| 0.0)))
            .collect(),
        Zdt3 => grid_1d(count)
            .map(|t| {
                let x1 = onto_intervals(t, &zdt::ZDT3_INTERVALS);
                let f2 = 1.0 - x1.sqrt() - x1 * (10.0 * std::f64::consts::PI * x1).sin();
                (vec![x1, f2], with_tail(&[x1], n, |_| 0.0))
            })
            .collect(),
        Zdt6 => {
            let (argmin, fmin) = zdt::zdt6_f1_minimum();
            grid_1d(count)
                .map(|t| {
                    let f1 = fmin + t * (1.0 - fmin);
                    let x1 = zdt::zdt6_x1_for(f1, argmin);
                    (vec![f1, 1.0 - f1 * f1], with_tail(&[x1], n, |_| 0.0))
                })
                .collect()
        }
        Dtlz1 => grid_2d(count)
            .map(|(u, v)| {
                let f = vec![0.5 * u * v, 0.5 * u * (1.0 - v), 0.5 * (1.0 - u)];
                (f, with_tail(&[u, v], n, |_| 0.5))
            })
            .collect(),
        Dtlz2 | Dtlz3 => grid_2d(count)
            .map(|(u, v)| (dtlz::sphere_point(u, v), with_tail(&[u, v], n, |_| 0.5)))
            .collect(),
        Dtlz4 => grid_2d(count)
            .map(|(u, v)| {
                let alpha = f64::from(dtlz::DTLZ4_ALPHA);
                let head = [u.powf(1.0 / alpha), v.powf(1.0 / alpha)];
                (dtlz::sphere_point(u, v), with_tail(&head, n, |_| 0.5))
            })
            .collect(),
        Dtlz5 | Dtlz6 => {
            let tail = if b == Dtlz5 { 0.5 } else { 0.0 };
            grid_1d(count)
                .map(|t| (dtlz::degenerate_point(t), with_tail(&[t, 0.5], n, |_| tail)))
                .collect()
        }
        Dtlz7 => grid_2d(count)
            .map(|(u, v)| {
                let x = [
                    onto_intervals(u, &dtlz::DTLZ7_INTERVALS),
                    onto_intervals(v, &dtlz::DTLZ7_INTERVALS),
                ];
                let h: f64 = x
                    .iter()
                    .map(|f| f / 2.0 * (1.0 + (3.0 * std::f64::consts::PI * f).sin()))
                    .sum();
                (vec![x[0], x[1], 2.0 * (3.0 - h)], with_tail(&x, n, |_| 0.0))
            })
            .collect(),
        Uf1 | Uf2 | Uf3 => grid_1d(count)
            .map(|t| {
                let x = match b {
                    Uf1 => with_tail(&[t], n, |j| uf::uf1_target(t, j, n)),
                    Uf2 => with_tail(&[t], n, |j| uf::uf2_target(t, j, n)),
                    _ => with_tail(&[t], n, |j| uf::uf3_target(t, j, n)),
                };
                (vec![t, 1.0 - t.sqrt()], x)
            })
            .collect(),
        Uf4 => grid_1d(count)
            .map(|t| {
                (
                    vec![t, 1.0 - t * t],
                    with_tail(&[t], n, |j| uf::uf1_target(t, j, n)),
                )
            })
            .collect(),
        Uf5 => {
            let levels = 2 * uf::UF5_N;
            let take = count.min(levels + 1);
            (0..take)
                .map(|i| {
                    let k = (i * levels + (take - 1) / 2) / (take - 1);
                    let x1 = k as f64 / levels as f64;
                    (
                        vec![x1, 1.0 - x1],
                        with_tail(&[x1], n, |j| uf::uf1_target(x1, j, n)),
                    )
                })
                .collect()
        }
        Uf6 => {
            let k = uf::UF6_N as f64;
            let intervals: Vec<(f64, f64)> = (1..=uf::UF6_N)
                .map(|i| {
                    (
                        (2.0 * i as f64 - 1.0) / (2.0 * k),
                        2.0 * i as f64 / (2.0 * k),
                    )
                })
                .collect();
            std::iter::once(0.0)
                .chain(grid_1d(count - 1).map(|t| onto_intervals(t, &intervals)))
                .map(|x1| {
                    (
                        vec![x1, 1.0 - x1],
                        with_tail(&[x1], n, |j| uf::uf1_target(x1, j, n)),
                    )
                })
                .collect()
        }
        Uf7 => grid_1d(count)
            .map(|t| {
                let x1 = t.powi(5);
                (
                    vec![t, 1.0 - t],
                    with_tail(&[x1], n, |j| uf::uf1_target(x1, j, n)),
                )
            })
            .collect(),
        Uf8 | Uf10 => grid_2d(count)
            .map(|(u, v)| {
                (
                    dtlz::sphere_point(u, v),
                    with_tail(&[u, v], n, |j| uf::three_obj_target(u, v, j, n)),
                )
            })
            .collect(),
        Uf9 => grid_2d(count)
            .map(|(u, v)| {
                let x1 = onto_intervals(u, &[(0.0, 0.25), (0.75, 1.0)]);
                (
                    vec![x1 * v, (1.0 - x1) * v, 1.0 - v],
                    with_tail(&[x1, v], n, |j| uf::three_obj_target(x1, v, j, n)),
                )
            })
            .collect(),
        Pol | Kur => unreachable!("file-backed fronts"),
    };
    pts
}

/// Keeps `count` points at evenly spaced positions of `points` (all if fewer).
fn thin_evenly<T>(points: Vec<T>, count: usize) -> Vec<T> {
    let len = points.len();
    if count >= len {
        return points;
    }
    let wanted: Vec<usize> = (0..count)
        .map(|i| (i * (len - 1) + (count - 1) / 2) / (count - 1))
        .collect();
    let mut next = 0;
    points
        .into_iter()
        .enumerate()
        .filter_map(|(i, p)| {
            if next < wanted.len() && wanted[next] == i {
                next += 1;
                Some(p)
            } else {
                None
            }
        })
        .collect()
}

/// Removes every dominated or duplicate vector, keeping the survivors in
/// ascending lexicographic order.
pub fn non_dominated_filter(points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    filter_by(points, |p| p)
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

fn filter_by<T>(mut items: Vec<T>, key: impl Fn(&T) -> &[f64]) -> Vec<T> {
    items.sort_by(|a, b| lex_cmp(key(a), key(b)));
    items.dedup_by(|a, b| key(a) == key(b));
    if items.first().is_some_and(|p| key(p).len() == 2) {
        let mut best = f64::INFINITY;
        items.retain(|p| {
            let keep = key(p)[1] < best;
            if keep {
                best = key(p)[1];
            }
            keep
        });
        return items;
    }
    // Lexicographic order means a point can only be dominated by an earlier one.
    let mut archive: Vec<T> = Vec::new();
    for p in items {
        if !archive
            .iter()
            .any(|a| compare(key(a), key(&p)) == Dominance::FirstDominates)
        {
            archive.push(p);
        }
    }
    archive
}

/// (objectives, decision) pair tracked by the brute-force sweep.
type Entry = (Vec<f64>, Vec<f64>);

fn entry_key(e: &Entry) -> &[f64] {
    &e.0
}

/// Grid passes run after the uniform sweep: each re-samples an 11-point-per-axis
/// box around (up to 2000 evenly chosen) surviving decision vectors, shrinking
/// the box 5x per pass.
const REFINE_PASSES: usize = 3;
const REFINE_POINTS: usize = 11;
const REFINE_CENTRES: usize = 2000;
const CHUNK: usize = 1 << 20;

/// Dense-grid reference front: evaluates `per_dim` evenly spaced values in every
/// decision dimension (endpoints included) and keeps the non-dominated set. The
/// survivors are then densified by local grid passes around their decision
/// vectors, and the result is thinned to at most `keep` points.
pub fn brute_force_front(b: Benchmark, per_dim: usize, keep: usize) -> Result<Vec<Vec<f64>>> {
    if per_dim < 2 || keep < 2 {
        return Err(usage("brute-force front needs per_dim >= 2 and keep >= 2"));
    }
    let spec = ProblemSpec::from(b);
    let n = spec.n_vars;
    let total = (per_dim as u128).pow(n as u32);
    if total > 50_000_000_000 {
        return Err(Error::Capacity(format!("{total} grid points for {b}")));
    }
    let total = total as usize;
    let lower = spec.bounds.lower();
    let upper = spec.bounds.upper();

    let mut archive: Vec<Entry> = Vec::new();
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let mut chunk: Vec<Entry> = Vec::with_capacity(end - start + archive.len());
        for idx in start..end {
            let mut x = vec![0.0; n];
            let mut rest = idx;
            for (d, v) in x.iter_mut().enumerate().rev() {
                *v = lower[d]
                    + spec.bounds.width(d) * (rest % per_dim) as f64 / (per_dim - 1) as f64;
                rest /= per_dim;
            }
            chunk.push((b.objectives(&x), x));
        }
        chunk.append(&mut archive);
        archive = filter_by(chunk, entry_key);
        start = end;
    }

    let mut half: Vec<f64> = (0..n)
        .map(|d| spec.bounds.width(d) / (per_dim - 1) as f64)
        .collect();
    let local = REFINE_POINTS.pow(n as u32);
    for _ in 0..REFINE_PASSES {
        let centres = thin_evenly(archive.clone(), REFINE_CENTRES);
        let mut chunk: Vec<Entry> = Vec::with_capacity(CHUNK);
        for (_, centre) in &centres {
            for idx in 0..local {
                let mut x = centre.clone();
                let mut rest = idx;
                for (d, v) in x.iter_mut().enumerate() {
                    let k = (rest % REFINE_POINTS) as f64;
                    rest /= REFINE_POINTS;
                    let offset = -half[d] + 2.0 * half[d] * k / (REFINE_POINTS - 1) as f64;
                    *v = (*v + offset).clamp(lower[d], upper[d]);
                }
                chunk.push((b.objectives(&x), x));
            }
            if chunk.len() >= CHUNK {
                chunk.append(&mut archive);
                archive = filter_by(std::mem::take(&mut chunk), entry_key);
            }
        }
        chunk.append(&mut archive);
        archive = filter_by(chunk, entry_key);
        half.iter_mut().for_each(|h| *h /= 5.0);
    }

    Ok(thin_evenly(
        archive.into_iter().map(|(f, _)| f).collect(),
        keep,
    ))
}

/// Parses the reference-front text format: one objective vector per line,
/// whitespace-separated decimals, `#` starts a comment.
pub fn read_front(text: &str) -> Result<FrontSample> {
    let mut points: Vec<ObjectiveVector> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let values = line
            .split_whitespace()
            .map(|tok| tok.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Config(format!("front line {}: {e}", lineno + 1)))?;
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config(format!(
                "front line {}: non-finite value",
                lineno + 1
            )));
        }
        if let Some(first) = points.first() {
            if first.len() != values.len() {
                return Err(Error::Config(format!(
                    "front line {}: {} values, expected {}",
                    lineno + 1,
                    values.len(),
                    first.len()
                )));
            }
        }
        points.push(ObjectiveVector(values));
    }
    if points.is_empty() {
        return Err(Error::Config("reference front is empty".into()));
    }
    for (i, a) in points.iter().enumerate() {
        if let Some(j) = points
            .iter()
            .position(|b| compare(b, a) == Dominance::FirstDominates)
        {
            return Err(Error::Config(format!(
                "reference front point {} is dominated by point {}",
                i + 1,
                j + 1
            )));
        }
    }
    Ok(FrontSample {
        points,
        source: FrontSource::File,
    })
}

pub fn read_front_file(path: &Path) -> Result<FrontSample> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::Config(format!(
            "cannot read reference front {}: {e}",
            path.display()
        ))
    })?;
    read_front(&text)
}

/// Writes points in the format accepted by [`read_front`]. Values use Rust's
/// shortest round-trip formatting.
pub fn write_front<W: Write, P: AsRef<[f64]>>(
    mut w: W,
    points: &[P],
    comments: &[String],
) -> std::io::Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    for p in points {
        let line: Vec<String> = p.as_ref().iter().map(|v| v.to_string()).collect();
        writeln!(w, "{}", line.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{dominates, evaluate};

    fn mutually_non_dominated(points: &[ObjectiveVector]) -> bool {
        points.iter().all(|a| {
            points
                .iter()
                .all(|b| dominates(a, b).unwrap() != Dominance::FirstDominates)
        })
    }

    #[test]
    fn zdt1_three_points() {
        let s = sample_true_front("ZDT1", 3).unwrap();
        let pts: Vec<Vec<f64>> = s.points.into_iter().map(|p| p.0).collect();
        assert_eq!(pts[0], vec![0.0, 1.0]);
        assert_eq!(pts[2], vec![1.0, 0.0]);
        // middle sample sits at f1 = 0.5 on the f2 = 1 - sqrt(f1) curve
        assert!((pts[1][1] - (1.0 - pts[1][0].sqrt())).abs() < 1e-15);
        for p in &pts {
            assert!((p[1] - (1.0 - p[0].sqrt())).abs() < 1e-15);
        }
    }

    #[test]
    fn sch_endpoints() {
        let s = sample_true_front("SCH", 2).unwrap();
        assert_eq!(s.points[0].0, vec![0.0, 4.0]);
        assert_eq!(s.points[1].0, vec![4.0, 0.0]);
    }

    #[test]
    fn count_below_two_is_rejected() {
        assert!(sample_true_front("ZDT1", 1).is_err());
    }

    #[test]
    fn every_front_is_non_dominated_and_sized() {
        for b in Benchmark::ALL {
            for count in [2, 50, 300] {
                let s = sample_true_front(b.name(), count).unwrap();
                assert!(!s.is_empty());
                let expected = match b {
                    Benchmark::Uf5 => count.min(21),
                    _ => count,
                };
                assert_eq!(s.len(), expected, "{b} count {count}");
                assert!(mutually_non_dominated(&s.points), "{b} count {count}");
                assert!(s.points.iter().all(|p| p.len() == b.n_objectives()));
            }
        }
    }

    #[test]
    fn preimages_reproduce_front_points() {
        for b in Benchmark::ALL
            .into_iter()
            .filter(|b| b.has_analytic_front())
        {
            let spec = ProblemSpec::from(b);
            for (f, x) in analytic_front_with_preimages(b.name(), 200).unwrap() {
                let y = evaluate(&spec, &x).unwrap();
                for (a, e) in y.iter().zip(f.iter()) {
                    assert!((a - e).abs() < 1e-12, "{b}: {:?} vs {:?}", y.0, f.0);
                }
            }
        }
    }

    #[test]
    fn file_fronts_load_and_thin() {
        for name in ["POL", "KUR"] {
            let full = sample_true_front(name, 100_000).unwrap();
            assert_eq!(full.source, FrontSource::File);
            assert!(
                full.len() >= 500,
                "{name} reference has {} points",
                full.len()
            );
            assert!(mutually_non_dominated(&full.points));
            let thin = sample_true_front(name, 10).unwrap();
            assert_eq!(thin.len(), 10);
            assert_eq!(thin.points[0], full.points[0]);
            assert_eq!(thin.points[9], *full.points.last().unwrap());
        }
    }

    #[test]
    fn missing_file_is_config_error() {
        let dir = std::env::temp_dir().join("otnsga-no-such-dir");
        let err = sample_true_front_in("POL", 10, Some(&dir)).unwrap_err();
        assert!(matches!(err, Error::Config(_)), "{err}");
        // analytic problems ignore the directory
        assert!(sample_true_front_in("ZDT1", 10, Some(&dir)).is_ok());
    }

    #[test]
    fn read_front_rejects_bad_input() {
        assert!(matches!(
            read_front("# only comments\n"),
            Err(Error::Config(_))
        ));
        assert!(matches!(read_front("1 2\n3\n"), Err(Error::Config(_))));
        assert!(matches!(read_front("1 x\n"), Err(Error::Config(_))));
        assert!(matches!(read_front("0 0\n1 1\n"), Err(Error::Config(_))));
        let ok = read_front("# c\n0 1 # trailing\n\n1 0\n").unwrap();
        assert_eq!(ok.len(), 2);
    }

    #[test]
    fn write_then_read() {
        let pts = vec![vec![0.1, 0.9], vec![0.5, 0.3]];
        let mut buf = Vec::new();
        write_front(&mut buf, &pts, &["test".into()]).unwrap();
        let back = read_front(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(back.points[1].0, pts[1]);
    }

    #[test]
    fn filter_removes_dominated() {
        let pts = vec![
            vec![1.0, 1.0, 1.0],
            vec![2.0, 2.0, 2.0],
            vec![0.0, 3.0, 1.0],
            vec![1.0, 1.0, 1.0],
        ];
        assert_eq!(
            non_dominated_filter(pts),
            vec![vec![0.0, 3.0, 1.0], vec![1.0, 1.0, 1.0]]
        );
        let two = vec![
            vec![1.0, 2.0],
            vec![2.0, 1.0],
            vec![2.0, 2.0],
            vec![1.0, 3.0],
        ];
        assert_eq!(
            non_dominated_filter(two),
            vec![vec![1.0, 2.0], vec![2.0, 1.0]]
        );
    }
}
