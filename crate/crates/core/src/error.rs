use thiserror::Error;

use crate::algebra::AxiomReport;
use crate::code::CnViolation;

/// Errors raised by the library.
///
/// Variants are grouped by the exit-code contract of the CLI: everything is an
/// input/precondition problem except [`Error::NotBck`] (a property failure
/// carrying its report) and [`Error::Internal`] (an invariant breach).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("algebra must have at least one element")]
    EmptyAlgebra,
    #[error("table row {row} has {found} entries, expected {expected}")]
    RaggedTable {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("table entry ({row},{col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} is outside 0..{order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("{perm:?} is not a permutation of 0..{order} fixing 0")]
    InvalidPermutation { perm: Vec<usize>, order: usize },
    #[error("{} element names given for an algebra of order {order}", .names)]
    NameCount { names: usize, order: usize },
    #[error("algebra is not a BCK-algebra")]
    NotBck(Box<AxiomReport>),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("partial order has no minimum element")]
    NoMinimum,
    #[error("codeword lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid codeword {0:?}: expected a non-empty string of 0/1")]
    InvalidCodeword(String),
    #[error("a block code needs at least one codeword")]
    EmptyCode,
    #[error("duplicate codeword {0}")]
    DuplicateCodeword(String),
    #[error("code does not satisfy the square upper-triangular hypotheses: {0}")]
    NotInFamily(CnViolation),
    #[error("codes belong to different families (n = {left} vs n = {right})")]
    FamilyMismatch { left: usize, right: usize },
    #[error("algebras have different orders ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("a BCK-function needs a non-empty domain")]
    EmptyDomain,
    #[error("duplicate domain label {0:?}")]
    DuplicateLabel(String),
    #[error("matrix must be non-empty")]
    EmptyMatrix,
    #[error("matrix is not square upper triangular with unit diagonal: {0}")]
    NotUnitriangular(String),
    #[error("{what} = {value} is outside the supported range 1..={max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
