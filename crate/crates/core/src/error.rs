use thiserror::Error;

use crate::combinatorics::KSubset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("hypergraph has no edges")]
    EmptyHypergraph,

    #[error("basis family is empty")]
    EmptyFamily,

    #[error("input is not shifted")]
    NotShifted,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0} is not a usable prime modulus")]
    NotPrime(u64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("monomial {0} cannot be unsquared")]
    Unsquarable(String),

    #[error("cardinality mismatch ({left} vs {right})")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("shifting disagrees across seeds {seeds:?}", seeds = .0.seeds)]
    NoConsensus(Box<ConsensusFailure>),

    #[error("budget exceeded: {needed} candidates against a budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Per-seed outputs of a shifting run whose seeds did not agree.
///
/// For uniform shifts each output is the edge list; for complexes it is the
/// full face list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsensusFailure {
    pub seeds: Vec<u64>,
    pub outputs: Vec<Vec<KSubset>>,
}
