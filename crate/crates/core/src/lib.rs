//! Exact counting of small graph patterns through the homomorphism basis.
//!
//! Subgraph, induced-subgraph and embedding counts are rewritten as finite
//! rational combinations of homomorphism counts, which are then evaluated by
//! dynamic programming over tree decompositions of the patterns.

pub mod colored;
pub mod decomp;
pub mod error;
pub mod extract;
pub mod fixtures;
pub mod graph;
pub mod homcount;
pub mod motif;
pub mod oracle;
pub mod partitions;

pub use error::{Error, Result};
