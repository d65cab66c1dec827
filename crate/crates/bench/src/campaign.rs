//! Running many seeded configurations and aggregating their indicators.

use otnsga::{Algorithm, RunConfig, RunReport};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::FileConfig;
use crate::BenchError;

/// Mean, best (smallest) and sample standard deviation of one indicator.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub mean: f64,
    pub best: f64,
    pub std: f64,
}

impl Stats {
    /// Statistics of a nonempty sample. A single value has `std = 0`.
    pub fn of(values: &[f64]) -> Stats {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let best = values.iter().copied().fold(f64::INFINITY, f64::min);
        let std = if values.len() > 1 {
            (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        Stats { mean, best, std }
    }
}

/// Aggregate over all completed seeds of one (problem, algorithm) pair.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub problem: String,
    pub algorithm: Algorithm,
    pub seeds: Vec<u64>,
    pub gd: Stats,
    pub sp: Stats,
    pub igd: Stats,
}

impl SummaryRow {
    pub fn runs(&self) -> usize {
        self.seeds.len()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub rows: Vec<SummaryRow>,
}

/// A run that ended in an error.
#[derive(Clone, Debug, PartialEq)]
pub struct RunFailure {
    pub problem: String,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct CampaignResult {
    /// Completed runs in plan order.
    pub reports: Vec<RunReport>,
    pub failures: Vec<RunFailure>,
    pub summary: CampaignSummary,
}

/// Expands a config into one run per problem, algorithm and seed, in that
/// nesting order.
pub fn plan(file: &FileConfig) -> Result<Vec<RunConfig>, BenchError> {
    let problems = file.problem_list();
    if problems.is_empty() {
        return Err(BenchError::Usage(
            "problem: at least one problem is required".into(),
        ));
    }
    let algorithms = file.algorithm_list()?;
    let seeds = file.seed_list();
    let mut configs = Vec::with_capacity(problems.len() * algorithms.len() * seeds.len());
    for problem in &problems {
        for &algorithm in &algorithms {
            for &seed in &seeds {
                configs.push(file.resolve(problem, algorithm, seed)?);
            }
        }
    }
    Ok(configs)
}

/// Runs every config, in parallel, and summarizes the completed ones. Results
/// keep the input order whatever the scheduling, and each run draws from its
/// own seeded stream.
pub fn run_campaign(configs: &[RunConfig]) -> CampaignResult {
    let outcomes: Vec<Result<RunReport, RunFailure>> = configs
        .par_iter()
        .map(|c| {
            otnsga::run(c).map_err(|e| RunFailure {
                problem: c.problem.clone(),
                algorithm: c.algorithm,
                seed: c.seed,
                message: e.to_string(),
            })
        })
        .collect();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(r) => reports.push(r),
            Err(f) => failures.push(f),
        }
    }
    let summary = summarize(&reports);
    CampaignResult {
        reports,
        failures,
        summary,
    }
}

/// One row per (problem, algorithm), in order of first appearance.
pub fn summarize(reports: &[RunReport]) -> CampaignSummary {
    let mut keys: Vec<(String, Algorithm)> = Vec::new();
    for r in reports {
        let key = (r.config.problem.clone(), r.config.algorithm);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    let rows = keys
        .into_iter()
        .map(|(problem, algorithm)| {
            let group: Vec<&RunReport> = reports
                .iter()
                .filter(|r| r.config.problem == problem && r.config.algorithm == algorithm)
                .collect();
            let pick =
                |f: fn(&RunReport) -> f64| -> Vec<f64> { group.iter().map(|r| f(r)).collect() };
            SummaryRow {
                seeds: group.iter().map(|r| r.config.seed).collect(),
                gd: Stats::of(&pick(|r| r.final_indicators.gd)),
                sp: Stats::of(&pick(|r| r.final_indicators.sp)),
                igd: Stats::of(&pick(|r| r.final_indicators.igd)),
                problem,
                algorithm,
            }
        })
        .collect();
    CampaignSummary { rows }
}
