use thiserror::Error;

use crate::vertex_set::{Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error("{n} vertices exceed the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid vertex ordering: {0}")]
    InvalidOrdering(String),
    #[error("level {level} outside 1..={n}")]
    LevelOutOfRange { level: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("a potential maximal clique is never empty")]
    EmptySet,
    #[error("set {set:?} is not contained in the graph")]
    NotInGraph { set: VertexSet },
    /// Neither or both of `K` and `K ∪ {v}` passed the PMC test, which
    /// cannot happen when `K` is a PMC of the previous prefix graph.
    #[error("inconsistent extension of {set:?} by vertex {vertex}: {detail}")]
    Inconsistent {
        set: VertexSet,
        vertex: Vertex,
        detail: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle budget is {budget}")]
    BudgetExceeded { n: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for family '{family}': {message}")]
    InvalidParams { family: String, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
