//! Orthogonal experimental design and the population initializer built on it.

mod array;
mod init;
mod segment;
mod soc;

pub use array::{
    construct_orthogonal_array, construct_orthogonal_array_capped, OrthogonalArray,
    DEFAULT_MAX_ROWS,
};
pub use init::{orthogonal_initialize, InitOutcome, InitParams};
pub use segment::{segment_space, SubspaceSet};
pub use soc::{soc_crossover, SocParams};
