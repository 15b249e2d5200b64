use thiserror::Error;

use crate::types::CandidateTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid curve class (d={d}, g={g}): {reason}")]
    InvalidCurve { d: i64, g: i64, reason: String },

    #[error("genus {g} exceeds the Castelnuovo bound {bound} for degree {d}")]
    AboveCastelnuovo { d: i64, g: i64, bound: i64 },

    #[error("branch index k={k} out of range for A_{n}")]
    BranchOutOfRange { n: i64, k: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("candidate {candidate} rejected: {reason}")]
    InvalidCandidate {
        candidate: CandidateTuple,
        reason: String,
    },

    #[error("profile search requires b > 4, got b={0}")]
    BTooSmall(i64),

    /// Two independent routes to the same quantity disagree.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
