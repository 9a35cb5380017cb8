use thiserror::Error;

use crate::enumerate::EnumerationStats;

/// Errors raised while building the clause model.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("clause {0} has more than one positive literal")]
    NonHornClause(usize),
    #[error("clause {0} belongs to a group but is empty")]
    EmptyClauseInGroup(usize),
    #[error("group {0} has no clauses")]
    EmptyGroup(usize),
    #[error("at least one group is required")]
    NoGroups,
    #[error("variable {var} exceeds declared variable count {num_vars}")]
    VarOutOfRange { var: u32, num_vars: u32 },
    #[error("clause contains a literal and its negation")]
    Tautology,
    #[error("literal 0 is not a valid literal")]
    ZeroLiteral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LturError {
    #[error("clauses pushed while the engine is in conflict; roll back first")]
    CalledInConflict,
    #[error("checkpoint refers to state that no longer exists")]
    StaleCheckpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("selector {selector} out of range 1..={num_selectors}")]
    OutOfRangeSelector { selector: u32, num_selectors: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("hard clauses are unsatisfiable on their own")]
    HardConflict,
    #[error("candidate groups are satisfiable together with the hard clauses")]
    NotUnsat,
    #[error(transparent)]
    Engine(#[from] LturError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance too large for the exhaustive oracle ({size} > {limit})")]
    TooLarge { size: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumError {
    #[error("hard clauses are unsatisfiable")]
    HardUnsat,
    #[error("formula is satisfiable with every group selected")]
    TotallySat,
    #[error("budget exhausted after {} MUSes and {} MCSes", .0.mus_count, .0.mcs_count)]
    BudgetExhausted(EnumerationStats),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("validation against the exhaustive oracle failed: {0}")]
    ValidationFailed(String),
    #[error(transparent)]
    Extract(#[from] ExtractError),
    #[error(transparent)]
    Engine(#[from] LturError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcnfError {
    #[error("line {0}: syntax error: {1}")]
    Syntax(usize, String),
    #[error("header mismatch: {0}")]
    HeaderMismatch(String),
    #[error("line {0}: clause is not Horn")]
    NonHornClause(usize),
    #[error("line {0}: unknown group")]
    UnknownGroup(usize),
    #[error("line {line}: {source}")]
    Model { line: usize, source: ModelError },
}
