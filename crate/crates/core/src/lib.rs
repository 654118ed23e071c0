//! Enumeration of the potential maximal cliques (PMCs) of an undirected
//! graph.
//!
//! Three interchangeable enumerators are provided:
//!
//! * [`enumerate_bt`]: the classic incremental algorithm, which stores the
//!   PMCs of every prefix graph and deduplicates them in a hash set;
//! * [`enumerate_nondup`]: the same breadth-first scheme with extra gates so
//!   that no PMC is ever generated twice;
//! * [`enumerate_dfs`]: a depth-first stream that extends each new PMC of a
//!   prefix graph straight to the full graph and keeps only polynomially
//!   many vertex sets alive.
//!
//! Minimal separators are streamed in polynomial space by
//! [`separators::separators`]. The [`oracle`] module holds two brute-force
//! ground truths for small graphs.

pub mod bench;
pub mod check;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod metrics;
pub mod oracle;
pub mod separators;
pub mod validate;
pub mod vertex_set;

pub use check::{extend_pmc, is_minimal_separator, is_pmc, PmcCandidate};
pub use enumerate::{
    enumerate, enumerate_bt, enumerate_dfs, enumerate_nondup, Algorithm, DfsStream, Gate, GateSet,
    Run,
};
pub use error::{CheckError, FamilyError, GraphError, OracleError};
pub use graph::{ComponentReport, Graph, GraphFormat, GraphView};
pub use metrics::Metrics;
pub use separators::{separators, separators_oracle, SeparatorStream};
pub use vertex_set::{Vertex, VertexSet, MAX_VERTICES};
