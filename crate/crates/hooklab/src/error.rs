//! Error type shared by every module.

use thiserror::Error;

use crate::shapes::Cell;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HookError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("cell {0} lies outside {1}")]
    CellOutside(Cell, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("repeated x values; use the tableau formula instead")]
    RepeatedPoint,
    #[error("permutation is not vexillary: {0}")]
    NotVexillary(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resample budget of {0} exhausted")]
    ResampleExhausted(usize),
    #[error("invalid path family: {0}")]
    InvalidPaths(String),
    #[error("shape too large: {0}")]
    TooLarge(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, HookError>;
