use thiserror::Error;

use crate::existence::ExistenceReport;

#[derive(Debug, Error)]
pub enum Error {
    /// An input value is non-finite or outside the range an operation accepts.
    #[error("{field} = {value}: {reason}")]
    Domain {
        field: String,
        value: f64,
        reason: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The edge data cannot belong to a compact tetrahedron (for example a
    /// non-positive diagonal cofactor).
    #[error("not a compact tetrahedron: {0}")]
    NotATetrahedron(String),

    /// The argument lies outside the open interval where the volume
    /// derivative is defined.
    #[error("outside the domain of the volume derivative: {0}")]
    OutsideDomain(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    /// A flat configuration was handed to an operation that needs full rank.
    #[error("degenerate embedding: the vertex Gram matrix has rank {rank}")]
    DegenerateEmbedding { rank: usize },

    #[error("not realizable in hyperbolic space: {0}")]
    NotRealizable(String),

    #[error("tetrahedron does not exist: {}", .0.failure_summary())]
    NonExistent(Box<ExistenceReport>),

    #[error("internal numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(field: impl Into<String>, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            field: field.into(),
            value,
            reason,
        }
    }
}
