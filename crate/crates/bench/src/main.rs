use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use otnsga::orthogonal::construct_orthogonal_array;
use otnsga::problems::{sample_true_front, write_front};
use otnsga_bench::config::{split_list, FileConfig};
use otnsga_bench::report::{config_echo, write_timings};
use otnsga_bench::{parse_seeds, plan, run_campaign, write_reports, write_run, BenchError};

#[derive(Parser)]
#[command(
    name = "otnsga-bench",
    version,
    about = "Seeded NSGA-II / OTNSGA-II benchmark runs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one problem with one algorithm and seed.
    Run(RunArgs),
    /// Run every problem x algorithm x seed combination and summarize.
    Campaign(CampaignArgs),
    /// Print sampled points of a problem's reference front.
    Front(FrontArgs),
    /// Print an orthogonal array and check its balance.
    VerifyOa(OaArgs),
}

/// Settings shared by `run` and `campaign`; they override the config file.
#[derive(Args)]
struct Overrides {
    /// Flat TOML config file.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    gens: Option<usize>,
    /// Seed list, e.g. `1..10` or `1,4,9`.
    #[arg(long)]
    seeds: Option<String>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long = "k-clusters")]
    k_clusters: Option<usize>,
    #[arg(long)]
    subspaces: Option<usize>,
    #[arg(long = "q-levels")]
    q_levels: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    algorithm: Option<String>,
    #[command(flatten)]
    common: Overrides,
    /// Directory for the trace, population and JSON report.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CampaignArgs {
    /// One or more comma-separated problem names.
    #[arg(long)]
    problem: Option<String>,
    /// Comma-separated algorithms (default: both).
    #[arg(long)]
    algorithm: Option<String>,
    #[command(flatten)]
    common: Overrides,
    #[arg(long, default_value = "results")]
    out: PathBuf,
}

#[derive(Args)]
struct FrontArgs {
    #[arg(long)]
    problem: String,
    #[arg(long, default_value_t = 1000)]
    points: usize,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OaArgs {
    #[arg(long = "q-levels", default_value_t = 3)]
    q_levels: usize,
    #[arg(long, default_value_t = 4)]
    factors: usize,
}

fn load_config(common: &Overrides, flags: FileConfig) -> Result<FileConfig, BenchError> {
    let base = match &common.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let seeds = common.seeds.as_deref().map(parse_seeds).transpose()?;
    let merged = base.overlay(FileConfig {
        pop_size: common.pop,
        generations: common.gens,
        seeds,
        delta: common.delta,
        k_clusters: common.k_clusters,
        subspaces: common.subspaces,
        q_levels: common.q_levels,
        ..flags
    });
    for w in merged.warnings() {
        eprintln!("warning: {w}");
    }
    Ok(merged)
}

fn run_one(args: RunArgs) -> Result<(), BenchError> {
    let cfg = load_config(
        &args.common,
        FileConfig {
            problem: args.problem,
            algorithm: args.algorithm,
            ..Default::default()
        },
    )?;
    let problem = match (&cfg.problem, cfg.problems.as_deref()) {
        (Some(p), _) => p.clone(),
        (None, Some([p])) => p.clone(),
        _ => {
            return Err(BenchError::Usage(
                "run: exactly one --problem is required".into(),
            ))
        }
    };
    let algorithm = match (&cfg.algorithm, &cfg.algorithms) {
        (None, None) => otnsga::Algorithm::Otnsga2,
        _ => match cfg.algorithm_list()?.as_slice() {
            [a] => *a,
            _ => return Err(BenchError::Usage("run: give exactly one algorithm".into())),
        },
    };
    let seed = match (cfg.seeds.as_deref(), cfg.seed) {
        (Some([s]), _) => *s,
        (Some(_), _) => return Err(BenchError::Usage("run: give exactly one seed".into())),
        (None, Some(s)) => s,
        (None, None) => 1,
    };
    let config = cfg.resolve(&problem, algorithm, seed)?;
    let report = otnsga::run(&config)?;
    let fin = &report.final_indicators;
    println!(
        "{} {} seed={} gd={} sp={} igd={} population={}",
        config.problem, config.algorithm, config.seed, fin.gd, fin.sp, fin.igd, fin.n_points
    );
    if report.init_topped_up() {
        eprintln!(
            "note: orthogonal pool was smaller than the population; topped up with random points"
        );
    }
    if let Some(out) = args.out {
        for path in write_run(&out, &report)? {
            println!("wrote {}", path.display());
        }
        write_timings(&out, std::slice::from_ref(&report), &[])?;
    }
    Ok(())
}

fn run_many(args: CampaignArgs) -> Result<bool, BenchError> {
    let cfg = load_config(
        &args.common,
        FileConfig {
            problems: args.problem.as_deref().map(split_list),
            algorithms: args.algorithm.as_deref().map(split_list),
            ..Default::default()
        },
    )?;
    let configs = plan(&cfg)?;
    let result = run_campaign(&configs);
    let echo = campaign_echo(&cfg, &configs);
    write_reports(
        &args.out,
        &result.reports,
        &result.failures,
        &result.summary,
        &echo,
    )?;
    let mut stdout = io::stdout().lock();
    for row in &result.summary.rows {
        let _ = writeln!(
            stdout,
            "{:<6} {:<8} runs={:<3} gd_mean={:.6e} sp_mean={:.6e} igd_mean={:.6e}",
            row.problem,
            row.algorithm,
            row.runs(),
            row.gd.mean,
            row.sp.mean,
            row.igd.mean
        );
    }
    for f in &result.failures {
        eprintln!(
            "run failed: {} {} seed={}: {}",
            f.problem, f.algorithm, f.seed, f.message
        );
    }
    let _ = writeln!(stdout, "reports in {}", args.out.display());
    Ok(result.failures.is_empty())
}

/// Shared settings of a campaign; per-run fields are replaced by lists.
fn campaign_echo(cfg: &FileConfig, configs: &[otnsga::RunConfig]) -> Vec<(String, String)> {
    let Some(first) = configs.first() else {
        return Vec::new();
    };
    let mut echo: Vec<(String, String)> = config_echo(first)
        .into_iter()
        .filter(|(k, _)| !matches!(k.as_str(), "problem" | "algorithm" | "seed"))
        .collect();
    let seeds: Vec<String> = cfg.seed_list().iter().map(u64::to_string).collect();
    let algorithms: Vec<String> = cfg
        .algorithm_list()
        .unwrap_or_default()
        .iter()
        .map(ToString::to_string)
        .collect();
    echo.insert(0, ("seeds".into(), seeds.join(";")));
    echo.insert(0, ("algorithms".into(), algorithms.join(";")));
    echo.insert(0, ("problems".into(), cfg.problem_list().join(";")));
    echo
}

fn emit_front(args: FrontArgs) -> Result<(), BenchError> {
    let front = sample_true_front(&args.problem, args.points)?;
    let comments = vec![
        format!("reference front of {}", args.problem.to_uppercase()),
        format!("{} points, {:?} source", front.len(), front.source),
    ];
    let write = |w: &mut dyn Write| write_front(w, &front.points, &comments);
    match args.out {
        Some(path) => {
            let mut buf = Vec::new();
            write(&mut buf).map_err(|source| BenchError::Io {
                path: path.clone(),
                source,
            })?;
            fs::write(&path, buf).map_err(|source| BenchError::Io { path, source })
        }
        None => write(&mut io::stdout().lock()).map_err(|source| BenchError::Io {
            path: Path::new("<stdout>").to_path_buf(),
            source,
        }),
    }
}

fn verify_oa(args: OaArgs) -> Result<bool, BenchError> {
    let oa = construct_orthogonal_array(args.q_levels, args.factors)?;
    let mut out = io::stdout().lock();
    let _ = writeln!(
        out,
        "# L{}({}^{}), J = {}",
        oa.rows(),
        oa.levels(),
        oa.factors(),
        oa.exponent()
    );
    for row in oa.iter_rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    let ok = oa.is_strength_two();
    let _ = writeln!(
        out,
        "strength-2 balance: {}",
        if ok { "ok" } else { "VIOLATED" }
    );
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(a) => run_one(a).map(|_| true),
        Command::Campaign(a) => run_many(a),
        Command::Front(a) => emit_front(a).map(|_| true),
        Command::VerifyOa(a) => verify_oa(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
