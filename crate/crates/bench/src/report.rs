//! CSV/JSON report files. Data files never contain timestamps; wall-clock
//! times go to a separate `timings.log`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use otnsga::{Algorithm, RunConfig, RunReport};

use crate::campaign::{CampaignSummary, RunFailure, Stats, SummaryRow};
use crate::BenchError;

pub const TRACE_FILE: &str = "trace.csv";
pub const POPULATION_FILE: &str = "population.csv";
pub const REPORT_FILE: &str = "report.json";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const TIMINGS_FILE: &str = "timings.log";

const SUMMARY_HEADER: [&str; 13] = [
    "problem",
    "algorithm",
    "runs",
    "seeds",
    "gd_mean",
    "gd_best",
    "gd_std",
    "sp_mean",
    "sp_best",
    "sp_std",
    "igd_mean",
    "igd_best",
    "igd_std",
];

/// `key = value` pairs describing a run, written at the top of every file.
pub fn config_echo(c: &RunConfig) -> Vec<(String, String)> {
    let k = c
        .prune
        .k_clusters
        .unwrap_or_else(|| c.prune.resolved_k(c.pop_size));
    [
        ("problem", c.problem.clone()),
        ("algorithm", c.algorithm.to_string()),
        ("seed", c.seed.to_string()),
        ("pop_size", c.pop_size.to_string()),
        ("generations", c.generations.to_string()),
        ("front_points", c.front_points.to_string()),
        ("p_crossover", c.variation.p_crossover.to_string()),
        ("p_mutation", c.variation.p_mutation.to_string()),
        ("eta_c", c.variation.eta_c.to_string()),
        ("eta_m", c.variation.eta_m.to_string()),
        ("k_clusters", k.to_string()),
        ("delta", c.prune.delta.to_string()),
        ("kmeans_max_iter", c.prune.kmeans_max_iter.to_string()),
        ("kmeans_tol", c.prune.kmeans_tol.to_string()),
        ("subspaces", c.init.subspaces.to_string()),
        ("q_levels", c.init.q_levels.to_string()),
        ("theta0_rel", c.init.theta0_rel.to_string()),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect()
}

fn write_comments<W: Write>(w: &mut W, echo: &[(String, String)]) -> io::Result<()> {
    for (k, v) in echo {
        writeln!(w, "# {k} = {v}")?;
    }
    Ok(())
}

fn csv_writer<W: Write>(w: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w)
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

/// Trace CSV: `generation,gd,sp,igd`, one row per generation.
pub fn write_trace<W: Write>(mut w: W, report: &RunReport) -> io::Result<()> {
    write_comments(&mut w, &config_echo(&report.config))?;
    let mut out = csv_writer(w);
    out.write_record(["generation", "gd", "sp", "igd"])
        .map_err(csv_err)?;
    for row in &report.trace {
        out.write_record([
            row.generation.to_string(),
            row.gd.to_string(),
            row.sp.to_string(),
            row.igd.to_string(),
        ])
        .map_err(csv_err)?;
    }
    out.flush()
}

/// Final population CSV with one `f1..fM` column per objective.
pub fn write_population<W: Write>(mut w: W, report: &RunReport) -> io::Result<()> {
    write_comments(&mut w, &config_echo(&report.config))?;
    let mut out = csv_writer(w);
    let m = report.resolved.n_objectives;
    out.write_record((1..=m).map(|i| format!("f{i}")))
        .map_err(csv_err)?;
    for member in &report.final_population {
        out.write_record(member.objectives.iter().map(f64::to_string))
            .map_err(csv_err)?;
    }
    out.flush()
}

pub fn write_summary<W: Write>(
    mut w: W,
    summary: &CampaignSummary,
    echo: &[(String, String)],
) -> io::Result<()> {
    write_comments(&mut w, echo)?;
    let mut out = csv_writer(w);
    out.write_record(SUMMARY_HEADER).map_err(csv_err)?;
    for row in &summary.rows {
        let seeds: Vec<String> = row.seeds.iter().map(u64::to_string).collect();
        let mut record = vec![
            row.problem.clone(),
            row.algorithm.to_string(),
            row.runs().to_string(),
            seeds.join(";"),
        ];
        for s in [row.gd, row.sp, row.igd] {
            record.extend([s.mean.to_string(), s.best.to_string(), s.std.to_string()]);
        }
        out.write_record(record).map_err(csv_err)?;
    }
    out.flush()
}

/// Parses a summary CSV written by [`write_summary`].
pub fn read_summary<R: io::Read>(r: R) -> Result<CampaignSummary, BenchError> {
    let bad = |msg: String| BenchError::Usage(format!("summary CSV: {msg}"));
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(r);
    let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if header.iter().ne(SUMMARY_HEADER) {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let num = |i: usize| -> Result<f64, BenchError> {
            record[i]
                .parse()
                .map_err(|_| bad(format!("bad number '{}'", &record[i])))
        };
        let stats = |i: usize| -> Result<Stats, BenchError> {
            Ok(Stats {
                mean: num(i)?,
                best: num(i + 1)?,
                std: num(i + 2)?,
            })
        };
        let seeds = record[3]
            .split(';')
            .map(|s| s.parse::<u64>().map_err(|_| bad(format!("bad seed '{s}'"))))
            .collect::<Result<Vec<_>, _>>()?;
        let runs: usize = record[2].parse().map_err(|_| bad("bad run count".into()))?;
        if runs != seeds.len() {
            return Err(bad(format!(
                "runs = {runs} but {} seeds listed",
                seeds.len()
            )));
        }
        rows.push(SummaryRow {
            problem: record[0].to_string(),
            algorithm: record[1]
                .parse::<Algorithm>()
                .map_err(|e| bad(e.to_string()))?,
            seeds,
            gd: stats(4)?,
            sp: stats(7)?,
            igd: stats(10)?,
        });
    }
    Ok(CampaignSummary { rows })
}

/// Directory holding the files of one run.
pub fn run_dir(out_dir: &Path, c: &RunConfig) -> PathBuf {
    out_dir
        .join("runs")
        .join(format!("{}-{}-seed{}", c.problem, c.algorithm, c.seed))
}

fn create(path: &Path) -> Result<io::BufWriter<fs::File>, BenchError> {
    let file = fs::File::create(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(io::BufWriter::new(file))
}

fn write_file(
    path: &Path,
    body: impl FnOnce(&mut io::BufWriter<fs::File>) -> io::Result<()>,
) -> Result<PathBuf, BenchError> {
    let mut w = create(path)?;
    body(&mut w)
        .and_then(|_| w.flush())
        .map_err(|source| BenchError::Io {
            path: path.to_path_buf(),
            source,
        })?;
    Ok(path.to_path_buf())
}

fn make_dir(path: &Path) -> Result<(), BenchError> {
    fs::create_dir_all(path).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes the trace, population and JSON report of one run.
pub fn write_run(out_dir: &Path, report: &RunReport) -> Result<Vec<PathBuf>, BenchError> {
    let dir = run_dir(out_dir, &report.config);
    make_dir(&dir)?;
    Ok(vec![
        write_file(&dir.join(TRACE_FILE), |w| write_trace(w, report))?,
        write_file(&dir.join(POPULATION_FILE), |w| write_population(w, report))?,
        write_file(&dir.join(REPORT_FILE), |w| {
            serde_json::to_writer_pretty(&mut *w, report).map_err(io::Error::other)?;
            writeln!(w)
        })?,
    ])
}

/// Writes every run's files, the campaign summary and the timings sidecar.
pub fn write_reports(
    out_dir: &Path,
    reports: &[RunReport],
    failures: &[RunFailure],
    summary: &CampaignSummary,
    echo: &[(String, String)],
) -> Result<Vec<PathBuf>, BenchError> {
    make_dir(out_dir)?;
    let mut written = Vec::new();
    for r in reports {
        written.extend(write_run(out_dir, r)?);
    }
    written.push(write_file(&out_dir.join(SUMMARY_FILE), |w| {
        write_summary(w, summary, echo)
    })?);
    written.push(write_timings(out_dir, reports, failures)?);
    Ok(written)
}

/// Appends wall-clock times and failures, stamped with the current time.
pub fn write_timings(
    out_dir: &Path,
    reports: &[RunReport],
    failures: &[RunFailure],
) -> Result<PathBuf, BenchError> {
    let path = out_dir.join(TIMINGS_FILE);
    let io_err = |source| BenchError::Io {
        path: path.clone(),
        source,
    };
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(&path)
        .map_err(io_err)?;
    let stamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let mut text = format!("# written at unix time {stamp}\n");
    for r in reports {
        text.push_str(&format!(
            "{} {} seed={} wall_clock_s={:.3}\n",
            r.config.problem,
            r.config.algorithm,
            r.config.seed,
            r.wall_clock.as_secs_f64()
        ));
    }
    for fail in failures {
        text.push_str(&format!(
            "{} {} seed={} FAILED: {}\n",
            fail.problem, fail.algorithm, fail.seed, fail.message
        ));
    }
    f.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(path)
}
