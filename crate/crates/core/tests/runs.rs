use otnsga::problems::{make_problem, sample_true_front};
use otnsga::{run, run_nsga2, Algorithm, RunConfig, RunReport};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(problem: &str, algorithm: Algorithm, pop: usize, gens: usize, seed: u64) -> RunConfig {
    let mut c = RunConfig::new(problem, algorithm);
    c.pop_size = pop;
    c.generations = gens;
    c.seed = seed;
    c
}

fn without_clock(mut r: RunReport) -> RunReport {
    r.wall_clock = Default::default();
    r
}

#[test]
fn full_size_runs_are_reproducible() {
    for algorithm in Algorithm::ALL {
        let c = config("ZDT1", algorithm, 100, 250, 42);
        let a = without_clock(run(&c).unwrap());
        let b = without_clock(run(&c).unwrap());
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}

#[test]
fn seeds_change_the_outcome() {
    let a = run(&config("ZDT2", Algorithm::Nsga2, 20, 10, 1)).unwrap();
    let b = run(&config("ZDT2", Algorithm::Nsga2, 20, 10, 2)).unwrap();
    assert_ne!(a.final_population, b.final_population);
}

#[test]
fn sch_converges() {
    for algorithm in Algorithm::ALL {
        let r = run(&config("SCH", algorithm, 20, 50, 3)).unwrap();
        assert!(
            r.trace[50].gd < r.trace[0].gd,
            "{algorithm}: {:?}",
            (r.trace[0].gd, r.trace[50].gd)
        );
    }
}

#[test]
fn zero_generations_reports_the_initial_population() {
    for algorithm in Algorithm::ALL {
        let r = run(&config("FON", algorithm, 12, 0, 1)).unwrap();
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.final_population.len(), 12);
        assert_eq!(r.trace[0].gd, r.final_indicators.gd);
    }
}

#[test]
fn pruned_population_never_exceeds_n() {
    let r = run(&config("DTLZ2", Algorithm::Otnsga2, 40, 30, 5)).unwrap();
    assert_eq!(r.trace.len(), 31);
    assert!(r
        .trace
        .iter()
        .all(|t| t.population <= 40 && t.population >= 2));
    assert_eq!(r.trace[0].population, 40);
    assert_eq!(r.final_population.len(), r.trace[30].population);
    assert!(r.final_population.iter().all(|m| m.objectives.len() == 3));
    let resolved = &r.resolved;
    assert_eq!(resolved.k_clusters, Some(2));
    assert_eq!(resolved.delta, Some(0.135));
}

#[test]
fn nsga2_keeps_population_size() {
    let problem = make_problem("ZDT3").unwrap();
    let reference = sample_true_front("ZDT3", 200).unwrap();
    let c = config("ZDT3", Algorithm::Nsga2, 16, 8, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let r = run_nsga2(&problem, &reference, &c, &mut rng).unwrap();
    assert!(r.trace.iter().all(|t| t.population == 16));
    assert!(r.init.is_none());
    assert_eq!(r.resolved.per_gene_mutation_rate, 1.0 / 30.0);
    assert_eq!(r.final_indicators.reference_id, "ZDT3:analytic:200");
}

#[test]
fn every_problem_runs_briefly() {
    for name in otnsga::problems::Benchmark::supported_names() {
        for algorithm in Algorithm::ALL {
            let r = run(&config(name, algorithm, 8, 2, 1)).unwrap();
            let f = &r.final_indicators;
            assert!(
                f.gd.is_finite() && f.sp.is_finite() && f.igd.is_finite(),
                "{name} {algorithm}"
            );
        }
    }
}

#[test]
fn invalid_configs_are_rejected() {
    assert!(run(&config("ZDT1", Algorithm::Nsga2, 7, 1, 1)).is_err());
    assert!(run(&config("NOPE", Algorithm::Nsga2, 8, 1, 1)).is_err());
    let mut c = config("ZDT1", Algorithm::Otnsga2, 8, 1, 1);
    c.prune.delta = 1.5;
    assert!(run(&c).is_err());
}
