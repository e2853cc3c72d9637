use thiserror::Error;

use crate::perm::DEGREE_CAP;

/// Errors surfaced by the library. Domain validation happens at construction
/// time (profiles, tuples, cyclic specs, partitions), so the arithmetic
/// kernels themselves never fail on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("degree {0} out of range (must be between 1 and {DEGREE_CAP})")]
    DegreeOutOfRange(usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("ramification profile has odd total ramification; no covers exist")]
    OddParity,

    #[error("monodromy product is not the identity")]
    ProductNotIdentity,

    #[error("monodromy group is not transitive")]
    NotTransitive,

    #[error("invalid cyclic cover data: {0}")]
    InvalidCyclicSpec(String),

    #[error("invalid odd partition: {0}")]
    InvalidOddPartition(String),

    #[error("degree {degree} infeasible for this stratum (need an even degree >= {min})")]
    InfeasibleDegree { degree: usize, min: usize },

    #[error("invalid zero profile: {0}")]
    InvalidZeroProfile(String),

    #[error("cover set is empty")]
    EmptyCoverSet,

    #[error("zero denominator in slope formula (degenerate family)")]
    ZeroDenominator,

    #[error(
        "work estimate {estimate} exceeds budget {budget}; raise the budget or lower the degree"
    )]
    BudgetExceeded { estimate: String, budget: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
