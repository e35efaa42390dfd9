use thiserror::Error;

use crate::pq::PqViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("half-plane normal (a, b) must be nonzero")]
    ZeroNormal,
    #[error("BAD_PARAMS: {0}")]
    BadParams(String),
    #[error("BAD_SEQUENCE: {0}")]
    BadSequence(String),
    /// A finite table cannot witness divergence; `table_relative_index` is the
    /// escape index computed against the table's last entry.
    #[error("NO_ESCAPE_PROOF: finite table cannot certify escape (table-relative index {table_relative_index})")]
    NoEscapeProof { table_relative_index: usize },
    #[error("EMPTY_REGION: {0}")]
    EmptyRegion(String),
    #[error("UNBOUNDED_REGION: {0}")]
    UnboundedRegion(String),
    #[error("NOT_COMPACT: {0}")]
    NotCompact(String),
    #[error("NOT_DISJOINT: {0} and {1} intersect")]
    NotDisjoint(String, String),
    #[error("NO_WITNESS: neither compactum meets {0} and {1}")]
    NoWitness(String, String),
    #[error("INVALID_INPUT: {0}")]
    InvalidInput(String),
    #[error("BUDGET_EXCEEDED: no transversal of size <= {max_size}; lower bound {lower_bound}")]
    BudgetExceeded { max_size: usize, lower_bound: usize },
    #[error("HYPOTHESIS_VIOLATED: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("PARSE_ERROR at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("DUPLICATE_LABEL: {0}")]
    DuplicateLabel(String),
    #[error("UNKNOWN_LABEL: {0}")]
    UnknownLabel(String),
}

/// The hypothesis of the two-compacta pipeline that failed, with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Hypothesis {
    #[error("{0} is not compact")]
    NotCompact(String),
    #[error("{0} and {1} are not disjoint")]
    NotDisjoint(String, String),
    #[error("(4,3)-property fails on {0}")]
    Pq(PqViolation),
}
