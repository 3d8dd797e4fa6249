use thiserror::Error;

use crate::identity::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table order must be at least 1")]
    EmptyTable,

    #[error("expected {expected} entries for an order-{order} table, found {found}")]
    LengthMismatch {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry {value} at index {index} is out of range for order {order}")]
    EntryOutOfRange { index: usize, value: usize, order: usize },

    #[error("not a permutation of 0..{order}: {reason}")]
    NotAPermutation { order: usize, reason: String },

    #[error("{map} is not an automorphism: fails on the pair ({x}, {y})")]
    NotAutomorphism { map: &'static str, x: usize, y: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("{which} table is not a Latin square: {detail}")]
    NotLatin { which: &'static str, detail: String },

    #[error("table is not a group")]
    NotAGroup,

    #[error("group is not commutative")]
    NotCommutative,

    #[error("table is not a Ward quasigroup")]
    NotWard,

    #[error("table is not medial")]
    NotMedial,

    #[error("table is not unipotent")]
    NotUnipotent,

    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("variable {0} is not bound")]
    UnboundVariable(char),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("{0}")]
    NotApplicable(String),

    #[error("order {order} exceeds the enumeration limit of {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("spec space of {specs} points exceeds the census limit of {limit}")]
    SpaceTooLarge { specs: u128, limit: u128 },

    #[error("{path}: line {line}, column {column}: {message}")]
    Format {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
