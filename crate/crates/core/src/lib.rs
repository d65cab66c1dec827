//! Multi-objective evolutionary optimization: NSGA-II, an orthogonal-design
//! initializer, similarity-driven population pruning, benchmark problems and
//! quality indicators.

pub mod error;
pub mod metrics;
pub mod model;
pub mod nsga2;
pub mod orthogonal;
pub mod problems;
pub mod pruning;
pub mod run;

pub use error::{Error, Result};
pub use run::{run, run_nsga2, run_otnsga2, Algorithm, RunConfig, RunReport};
