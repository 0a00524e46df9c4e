use thiserror::Error;

use crate::root_system::Kind;

/// Errors produced by constructors and operations with restricted domains.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} out of range for type {kind} (need {min} or larger)")]
    RankOutOfRange { kind: Kind, rank: usize, min: usize },

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("node {node} of {kind}{rank} is outside the supported range {range}")]
    NodeOutsideFamily {
        kind: Kind,
        rank: usize,
        node: usize,
        range: &'static str,
    },

    #[error("residue r={r} is not admissible for node {node} of type {kind} ({reason})")]
    BadResidue {
        kind: Kind,
        node: usize,
        r: usize,
        reason: &'static str,
    },

    #[error("partition {0:?} does not belong to the family for this context")]
    PartitionOutsideFamily(Vec<usize>),

    #[error("{0} is not in the support of the partition")]
    NotInSupport(usize),

    #[error("(r, j) = ({r}, {j}) has no defining word for type {kind}")]
    NoSuchWord { kind: Kind, r: usize, j: usize },

    #[error("no closed-form branch covers (r, j, l) = ({r}, {j}, {l}) for type {kind}")]
    NoClosedForm { kind: Kind, r: usize, j: usize, l: usize },

    #[error("spectral shift 4s = {s4} gives a non-integer q-exponent for this type")]
    FractionalExponent { s4: i64 },

    #[error("operation requires type {expected}, got {got}")]
    WrongKind { expected: Kind, got: Kind },

    #[error("enumerated count {got} disagrees with the closed formula {expected}")]
    CountMismatch { got: u64, expected: u64 },

    #[error("unknown suite {0:?}; expected counts|dims|proj|braid|classes|all")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
