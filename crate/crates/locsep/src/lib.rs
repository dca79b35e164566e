//! Local separations of graphs, bottleneck-derived nested sets, and the
//! canonical graph-decompositions they induce, together with a bounded
//! covering-space engine used as an independent verification oracle.

pub mod cycles;
pub mod error;
pub mod fixtures;
pub mod global;
pub mod graph;

pub use error::{Error, Result};
