//! Benchmark harness for the `otnsga` optimizers: seeded single runs and
//! multi-seed campaigns with CSV/JSON reports.

pub mod campaign;
pub mod config;
pub mod report;

use std::path::PathBuf;

pub use campaign::{
    plan, run_campaign, summarize, CampaignResult, CampaignSummary, RunFailure, Stats, SummaryRow,
};
pub use config::{parse_seeds, FileConfig};
pub use report::{read_summary, write_reports, write_run, write_summary, write_trace};

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    /// Bad flags, config files or names.
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Run(#[from] otnsga::Error),
}

impl BenchError {
    /// Process exit status: 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            BenchError::Usage(_) => 2,
            BenchError::Run(otnsga::Error::Usage(_)) => 2,
            _ => 1,
        }
    }
}
