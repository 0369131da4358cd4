use alloc::string::String;

/// Errors produced by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The operation table is not a square array of in-range elements.
    #[error("malformed table: {0}")]
    MalformedTable(String),

    /// The table is well formed but fails at least one quandle axiom.
    #[error("table violates quandle axiom {axiom} (witness {witness:?})")]
    NotAQuandle { axiom: u8, witness: alloc::vec::Vec<usize> },

    #[error("{what} exceeds capacity limit {limit}")]
    Capacity { what: &'static str, limit: usize },

    #[error("expected {expected} basepoints, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("arc {arc} out of range for a diagram with {arc_count} arcs")]
    ArcOutOfRange { arc: usize, arc_count: usize },

    #[error("element {element} out of range for a quandle of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    /// Map number `index` of a supplied endomorphism subset is not a
    /// pointed endomorphism.
    #[error("map {index} of the endomorphism subset is not a pointed endomorphism: {reason}")]
    NotAnEndomorphism { index: usize, reason: String },

    #[error("image of a coloring under an endomorphism is not a coloring")]
    NotClosed,
}

pub type Result<T> = core::result::Result<T, Error>;
