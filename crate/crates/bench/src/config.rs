//! Flat TOML configuration files with command-line overrides.

use std::fs;
use std::path::Path;

use otnsga::{Algorithm, RunConfig};
use serde::Deserialize;

use crate::BenchError;

/// Recommended band for the pruning strength.
pub const DELTA_BAND: (f64, f64) = (0.12, 0.15);

/// Every key a config file may set. All are optional; missing keys keep
/// their defaults and command-line flags override what the file says.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub problems: Option<Vec<String>>,
    pub algorithm: Option<String>,
    pub algorithms: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub seeds: Option<Vec<u64>>,
    pub pop_size: Option<usize>,
    pub generations: Option<usize>,
    pub front_points: Option<usize>,
    pub p_crossover: Option<f64>,
    pub p_mutation: Option<f64>,
    pub eta_c: Option<f64>,
    pub eta_m: Option<f64>,
    pub k_clusters: Option<usize>,
    pub delta: Option<f64>,
    pub kmeans_max_iter: Option<usize>,
    pub kmeans_tol: Option<f64>,
    pub subspaces: Option<usize>,
    pub q_levels: Option<usize>,
    pub theta0_rel: Option<f64>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self, BenchError> {
        toml::from_str(text).map_err(|e| BenchError::Usage(format!("config: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Self, BenchError> {
        let text = fs::read_to_string(path).map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text).map_err(|e| match e {
            BenchError::Usage(msg) => BenchError::Usage(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Fields set in `other` replace the ones in `self`.
    pub fn overlay(self, other: FileConfig) -> FileConfig {
        macro_rules! pick {
            ($($f:ident),*) => { FileConfig { $($f: other.$f.or(self.$f)),* } };
        }
        pick!(
            problem,
            problems,
            algorithm,
            algorithms,
            seed,
            seeds,
            pop_size,
            generations,
            front_points,
            p_crossover,
            p_mutation,
            eta_c,
            eta_m,
            k_clusters,
            delta,
            kmeans_max_iter,
            kmeans_tol,
            subspaces,
            q_levels,
            theta0_rel
        )
    }

    /// Problems named by `problems` or, failing that, `problem`.
    pub fn problem_list(&self) -> Vec<String> {
        match (&self.problems, &self.problem) {
            (Some(list), _) => list.clone(),
            (None, Some(p)) => vec![p.clone()],
            (None, None) => Vec::new(),
        }
    }

    pub fn algorithm_list(&self) -> Result<Vec<Algorithm>, BenchError> {
        let names = match (&self.algorithms, &self.algorithm) {
            (Some(list), _) => list.clone(),
            (None, Some(a)) => vec![a.clone()],
            (None, None) => return Ok(Algorithm::ALL.to_vec()),
        };
        names
            .iter()
            .map(|n| {
                n.parse::<Algorithm>()
                    .map_err(|e| BenchError::Usage(format!("algorithm: {e}")))
            })
            .collect()
    }

    pub fn seed_list(&self) -> Vec<u64> {
        match (&self.seeds, self.seed) {
            (Some(list), _) => list.clone(),
            (None, Some(s)) => vec![s],
            (None, None) => (1..=10).collect(),
        }
    }

    /// Fully resolved config for one (problem, algorithm, seed) triple.
    pub fn resolve(
        &self,
        problem: &str,
        algorithm: Algorithm,
        seed: u64,
    ) -> Result<RunConfig, BenchError> {
        otnsga::problems::make_problem(problem)
            .map_err(|e| BenchError::Usage(format!("problem: {e}")))?;
        let mut c = RunConfig::new(problem, algorithm);
        c.seed = seed;
        macro_rules! set {
            ($($src:ident => $($dst:ident).+),* $(,)?) => {
                $(if let Some(v) = self.$src { c.$($dst).+ = v; })*
            };
        }
        set!(
            pop_size => pop_size,
            generations => generations,
            front_points => front_points,
            p_crossover => variation.p_crossover,
            p_mutation => variation.p_mutation,
            eta_c => variation.eta_c,
            eta_m => variation.eta_m,
            delta => prune.delta,
            kmeans_max_iter => prune.kmeans_max_iter,
            kmeans_tol => prune.kmeans_tol,
            subspaces => init.subspaces,
            q_levels => init.q_levels,
            theta0_rel => init.theta0_rel,
        );
        if self.k_clusters.is_some() {
            c.prune.k_clusters = self.k_clusters;
        }
        c.validate().map_err(|e| BenchError::Usage(e.to_string()))?;
        Ok(c)
    }

    /// Non-fatal remarks about unusual but accepted settings.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(d) = self.delta {
            if d < DELTA_BAND.0 || d > DELTA_BAND.1 {
                out.push(format!(
                    "delta = {d} lies outside the recommended band [{}, {}]",
                    DELTA_BAND.0, DELTA_BAND.1
                ));
            }
        }
        out
    }
}

/// Parses a seed list such as `1,2,5`, `1..10` (inclusive) or a mix.
pub fn parse_seeds(text: &str) -> Result<Vec<u64>, BenchError> {
    let bad = || BenchError::Usage(format!("seeds: cannot parse '{text}'"));
    let mut seeds = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            seeds.extend(a..=b);
        } else {
            seeds.push(part.parse().map_err(|_| bad())?);
        }
    }
    if seeds.is_empty() {
        return Err(bad());
    }
    Ok(seeds)
}

/// Splits a comma-separated list, dropping empty items.
pub fn split_list(text: &str) -> Vec<String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}
