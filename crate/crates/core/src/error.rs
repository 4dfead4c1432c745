use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("no cubic graph on {0} vertices is supported here (need an even order in range)")]
    BadOrder(usize),
    #[error("edge {0}-{1} is not in the graph")]
    EdgeAbsent(usize, usize),
    #[error("graph has no cycle")]
    Acyclic,
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    /// A stated hypothesis of an operation does not hold for the input.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    /// A guaranteed object was not found, or a derived invariant failed.
    /// `step` names the claim of the construction that broke.
    #[error("internal invariant violated at step `{step}`: {detail}")]
    Invariant { step: &'static str, detail: String },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invariant(step: &'static str, detail: impl Into<String>) -> Error {
    Error::Invariant {
        step,
        detail: detail.into(),
    }
}
