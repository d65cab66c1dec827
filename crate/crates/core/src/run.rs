//! Complete optimization runs with per-generation indicator traces.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{usage, Error, Result};
use crate::metrics::{indicator_report, IndicatorReport};
use crate::model::{Population, Problem};
use crate::nsga2::{
    environmental_selection, make_offspring, random_initialize, rank_and_crowd, VariationParams,
};
use crate::orthogonal::{orthogonal_initialize, InitParams};
use crate::problems::{make_problem, sample_true_front, FrontSample, FrontSource};
use crate::pruning::{prune_population, PruneParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Nsga2,
    Otnsga2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Nsga2, Algorithm::Otnsga2];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Nsga2 => "nsga2",
            Algorithm::Otnsga2 => "otnsga2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                usage(format!(
                    "unknown algorithm '{s}'; expected one of {{nsga2, otnsga2}}"
                ))
            })
    }
}

/// Everything needed to reproduce one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: String,
    pub algorithm: Algorithm,
    pub pop_size: usize,
    pub generations: usize,
    pub variation: VariationParams,
    pub prune: PruneParams,
    pub init: InitParams,
    pub seed: u64,
    /// Number of reference-front points used by the indicators.
    pub front_points: usize,
}

impl RunConfig {
    /// A config with every default filled in.
    pub fn new(problem: impl Into<String>, algorithm: Algorithm) -> Self {
        Self {
            problem: problem.into(),
            algorithm,
            pop_size: 100,
            generations: 250,
            variation: VariationParams::default(),
            prune: PruneParams::default(),
            init: InitParams::default(),
            seed: 0,
            front_points: 1000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.pop_size < 4 || !self.pop_size.is_multiple_of(2) {
            return Err(usage(format!(
                "pop_size must be even and at least 4, got {}",
                self.pop_size
            )));
        }
        if self.front_points < 2 {
            return Err(usage(format!(
                "front_points must be at least 2, got {}",
                self.front_points
            )));
        }
        self.variation.validate()?;
        self.prune.validate()?;
        self.init.validate()
    }
}

/// Indicator values of the population after one generation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub generation: usize,
    pub gd: f64,
    pub sp: f64,
    pub igd: f64,
    /// Population size at this generation (pruning can shrink it).
    pub population: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FinalMember {
    pub decision: Vec<f64>,
    pub objectives: Vec<f64>,
    pub rank: Option<usize>,
}

/// Settings derived from the config and the problem, spelled out in full.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolvedSettings {
    pub n_vars: usize,
    pub n_objectives: usize,
    pub crossover: String,
    pub mutation: String,
    pub p_crossover: f64,
    pub p_mutation: f64,
    pub per_gene_mutation_rate: f64,
    pub eta_c: f64,
    pub eta_m: f64,
    pub initialization: String,
    pub subspaces: Option<usize>,
    pub q_levels: Option<usize>,
    pub theta0_rel: Option<f64>,
    pub k_clusters: Option<usize>,
    pub delta: Option<f64>,
    pub reference_points: usize,
    pub reference_source: FrontSource,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InitSummary {
    pub pool_size: usize,
    pub candidate_size: usize,
    pub random_fill: usize,
}

/// Outcome of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: RunConfig,
    pub resolved: ResolvedSettings,
    /// One row per generation, starting with the initial population.
    pub trace: Vec<TraceRow>,
    pub final_population: Vec<FinalMember>,
    pub final_indicators: IndicatorReport,
    pub init: Option<InitSummary>,
    /// Elapsed time; kept out of serialized output so reports stay reproducible.
    #[serde(skip)]
    pub wall_clock: Duration,
}

impl RunReport {
    /// True when orthogonal initialization had to add random points.
    pub fn init_topped_up(&self) -> bool {
        self.init.as_ref().is_some_and(|i| i.random_fill > 0)
    }
}

fn reference_id(problem: &str, reference: &FrontSample) -> String {
    let source = match reference.source {
        FrontSource::Analytic => "analytic",
        FrontSource::File => "file",
    };
    format!("{problem}:{source}:{}", reference.len())
}

struct Tracker<'a> {
    reference: &'a FrontSample,
    trace: Vec<TraceRow>,
}

impl Tracker<'_> {
    fn record(&mut self, pop: &Population) -> Result<()> {
        let objectives = pop.objectives();
        let report = indicator_report(&objectives, &self.reference.points, "")?;
        self.trace.push(TraceRow {
            generation: pop.generation,
            gd: report.gd,
            sp: report.sp,
            igd: report.igd,
            population: pop.len(),
        });
        Ok(())
    }
}

fn resolve<P: Problem + ?Sized>(
    problem: &P,
    config: &RunConfig,
    reference: &FrontSample,
) -> ResolvedSettings {
    let ot = config.algorithm == Algorithm::Otnsga2;
    ResolvedSettings {
        n_vars: problem.n_vars(),
        n_objectives: problem.n_objectives(),
        crossover: "sbx".into(),
        mutation: "polynomial".into(),
        p_crossover: config.variation.p_crossover,
        p_mutation: config.variation.p_mutation,
        per_gene_mutation_rate: 1.0 / problem.n_vars() as f64,
        eta_c: config.variation.eta_c,
        eta_m: config.variation.eta_m,
        initialization: if ot { "orthogonal" } else { "uniform" }.into(),
        subspaces: ot.then_some(config.init.subspaces),
        q_levels: ot.then_some(config.init.q_levels),
        theta0_rel: ot.then_some(config.init.theta0_rel),
        k_clusters: ot.then(|| config.prune.resolved_k(config.pop_size)),
        delta: ot.then_some(config.prune.delta),
        reference_points: reference.len(),
        reference_source: reference.source,
    }
}

fn finish<P: Problem + ?Sized>(
    problem: &P,
    config: RunConfig,
    reference: &FrontSample,
    pop: Population,
    trace: Vec<TraceRow>,
    init: Option<InitSummary>,
    started: Instant,
) -> Result<RunReport> {
    let objectives = pop.objectives();
    let final_indicators = indicator_report(
        &objectives,
        &reference.points,
        &reference_id(problem.name(), reference),
    )?;
    let resolved = resolve(problem, &config, reference);
    Ok(RunReport {
        config,
        resolved,
        trace,
        final_population: pop
            .members
            .into_iter()
            .map(|m| FinalMember {
                decision: m.decision.into_inner(),
                objectives: m.objectives.into_inner(),
                rank: m.rank,
            })
            .collect(),
        final_indicators,
        init,
        wall_clock: started.elapsed(),
    })
}

/// Plain NSGA-II from a uniformly random start. The report's config echo is
/// `config` with `algorithm` set to NSGA-II.
pub fn run_nsga2<P, R>(
    problem: &P,
    reference: &FrontSample,
    config: &RunConfig,
    rng: &mut R,
) -> Result<RunReport>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    let started = Instant::now();
    let config = RunConfig {
        algorithm: Algorithm::Nsga2,
        ..config.clone()
    };
    config.validate()?;
    let n = config.pop_size;
    let mut tracker = Tracker {
        reference,
        trace: Vec::with_capacity(config.generations + 1),
    };

    let mut pop = random_initialize(problem, n, rng)?;
    tracker.record(&pop)?;
    for generation in 1..=config.generations {
        let offspring = make_offspring(&pop, n, problem, &config.variation, rng)?;
        let mut combined = pop;
        combined.members.extend(offspring);
        pop = environmental_selection(combined, n)?;
        pop.generation = generation;
        tracker.record(&pop)?;
    }
    finish(
        problem,
        config,
        reference,
        pop,
        tracker.trace,
        None,
        started,
    )
}

/// NSGA-II with orthogonal initialization and a pruning pass after every
/// environmental selection. Pruned populations are not refilled; the next
/// generation still breeds `pop_size` offspring from the survivors.
pub fn run_otnsga2<P, R>(
    problem: &P,
    reference: &FrontSample,
    config: &RunConfig,
    rng: &mut R,
) -> Result<RunReport>
where
    P: Problem + ?Sized,
    R: Rng + ?Sized,
{
    let started = Instant::now();
    let config = RunConfig {
        algorithm: Algorithm::Otnsga2,
        ..config.clone()
    };
    config.validate()?;
    let n = config.pop_size;
    let mut tracker = Tracker {
        reference,
        trace: Vec::with_capacity(config.generations + 1),
    };

    let init = orthogonal_initialize(problem, n, &config.init, rng)?;
    let summary = InitSummary {
        pool_size: init.pool_size,
        candidate_size: init.candidate_size,
        random_fill: init.random_fill,
    };
    let mut pop = init.population;
    tracker.record(&pop)?;
    for generation in 1..=config.generations {
        rank_and_crowd(&mut pop);
        let offspring = make_offspring(&pop, n, problem, &config.variation, rng)?;
        let mut combined = pop;
        combined.members.extend(offspring);
        let mut survivors = environmental_selection(combined, n)?;
        rank_and_crowd(&mut survivors);
        pop = prune_population(&survivors, &config.prune, rng)?.population;
        pop.generation = generation;
        tracker.record(&pop)?;
    }
    finish(
        problem,
        config,
        reference,
        pop,
        tracker.trace,
        Some(summary),
        started,
    )
}

/// Runs `config` end to end: builds the benchmark problem and its reference
/// front and seeds a ChaCha8 stream from `config.seed`.
pub fn run(config: &RunConfig) -> Result<RunReport> {
    config.validate()?;
    let problem = make_problem(&config.problem)?;
    let reference = sample_true_front(&config.problem, config.front_points)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    match config.algorithm {
        Algorithm::Nsga2 => run_nsga2(&problem, &reference, config, &mut rng),
        Algorithm::Otnsga2 => run_otnsga2(&problem, &reference, config, &mut rng),
    }
}
