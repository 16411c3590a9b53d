use thiserror::Error;

use crate::validate::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfkError {
    #[error("differential does not square to zero: {0}")]
    NotSquareZero(String),
    #[error("differential entry ({row}, {col}) is not grading-homogeneous")]
    Inhomogeneous { row: usize, col: usize },
    #[error("complex has entries involving the variable; expected an F2 complex")]
    NotVariableFree,
    #[error("invalid complex: {}", display_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("polynomial is not staircase-shaped: {0}")]
    NotStaircase(String),
    #[error("cable condition violated: {0}")]
    Cable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("t = {0} lies outside [0, 2]")]
    TOutOfRange(String),
    #[error("expected a free part of rank 1, found rank {0}")]
    FreeRank(usize),
    #[error("both ν(C) = τ(C) + 1 and ν(C*) = τ(C*) + 1 hold")]
    EpsilonConflict,
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("internal error: {0}")]
    Internal(String),
}

fn display_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
