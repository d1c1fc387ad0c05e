use thiserror::Error;

use crate::algebra::LawReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sample")]
    EmptySample,

    #[error("bound violated: degree {degree} exceeds bound {bound}")]
    BoundViolated { degree: usize, bound: String },

    #[error("bimodule hypothesis violated: {law} (witness: {witness})")]
    BimoduleHypothesis { law: &'static str, witness: String },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("axiom violated: {}", .0.first_failure().unwrap_or("unknown"))]
    LawsViolated(LawReport<String>),

    #[error("element {0} is not additively idempotent")]
    NotIdempotent(String),

    #[error("subset is not a submodule")]
    NotSubmodule,

    #[error("subset is not subtractive")]
    NotSubtractive,

    #[error("first submodule is not contained in the second")]
    NotContained,

    #[error("structure is not a ring")]
    NotARing,

    #[error("search budget exceeded ({needed} candidates, budget {budget})")]
    SearchBudget { needed: String, budget: u64 },

    /// A proven property failed to hold; points at a bug in the engine or the input plumbing.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
