use thiserror::Error;

use crate::weyl::GroupContext;

/// Errors raised by the engine.
///
/// Arithmetic failures (`NonIntegral`) signal a convention bug somewhere in a
/// counting formula; callers should treat them as fatal rather than retry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group contexts differ: {0} vs {1}")]
    ContextMismatch(GroupContext, GroupContext),
    #[error("simple reflection s_{index} does not exist in {ctx}")]
    ReflectionOutOfRange { ctx: GroupContext, index: usize },
    #[error("{0} is not a symplectic context")]
    NotSymplectic(GroupContext),
    #[error("invalid group parameters: {0}")]
    InvalidContext(String),
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid alcove: {0}")]
    InvalidAlcove(String),
    #[error("alcove is not mu-permissible")]
    NotPermissible,
    #[error("genus {g} outside the supported range {min}..={max}")]
    GenusOutOfRange { g: usize, min: usize, max: usize },
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("empty index set")]
    EmptySet,
    #[error("element is not superspecial")]
    NotSuperspecial,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("Coxeter group has more than {0} elements (infinite or over budget)")]
    GroupTooLarge(usize),
    #[error("non-integral result in {context}: {value}")]
    NonIntegral { context: String, value: String },
    #[error("invalid arithmetic input: {0}")]
    InvalidArithmetic(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
