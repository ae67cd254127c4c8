//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller passed incompatible shapes (t, k, or coordinate counts).
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Caller mixed objects living on different weighted spaces.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    /// Atom, word, or block index out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Malformed or contradictory input values.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A construction violated a structural invariant; the report lists every violation.
    #[error("invalid action:\n{0}")]
    InvalidAction(String),

    /// Exhaustive enumeration refused; the message names the bound.
    #[error("enumeration budget exceeded: {blocks}^{atoms} = {labelings} labelings exceed the budget of {budget}")]
    BudgetExceeded {
        atoms: usize,
        blocks: usize,
        labelings: u128,
        budget: u64,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
