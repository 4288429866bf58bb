use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("cone is not pointed (it contains a line)")]
    NotPointed,
    #[error("cone is not generating (generators do not span the space)")]
    NotGenerating,
    #[error("vector is not in the positive cone")]
    NotPositive,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("matrix is not a band projection")]
    NotBandProjection,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("too many facets for band enumeration: {count} > {limit}")]
    TooManyFacets { count: usize, limit: usize },
    #[error("oracle cross-check failed: {0}")]
    ValidationFailure(String),
    #[error("direct sum exists but positivity fails: {0}")]
    PositivityContradiction(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("witness search exhausted: {0}")]
    SearchExhausted(String),
}

impl Error {
    /// Errors that falsify a run: the computation contradicts a proved
    /// statement, so the implementation (or an assumption) is wrong.
    pub fn is_theorem_violation(&self) -> bool {
        matches!(
            self,
            Error::ValidationFailure(_)
                | Error::PositivityContradiction(_)
                | Error::TheoremViolation(_)
                | Error::SearchExhausted(_)
        )
    }

    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyInput(_) => "EmptyInput",
            Error::NotPointed => "NotPointed",
            Error::NotGenerating => "NotGenerating",
            Error::NotPositive => "NotPositive",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotBandProjection => "NotBandProjection",
            Error::NotApplicable(_) => "NotApplicable",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::TooManyFacets { .. } => "TooManyFacets",
            Error::ValidationFailure(_) => "ValidationFailure",
            Error::PositivityContradiction(_) => "PositivityContradiction",
            Error::TheoremViolation(_) => "TheoremViolation",
            Error::SearchExhausted(_) => "SearchExhausted",
        }
    }
}
