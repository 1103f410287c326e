//! Crate-wide error type.

use core::fmt;

/// Errors reported by constructors and operations with preconditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A generator or basis index lies outside its valid range.
    IndexOutOfRange { index: usize, max: usize },
    /// A constructor received parameters violating a documented invariant.
    InvalidParams(&'static str),
    /// A grid is too small for the requested finite-difference stencil.
    GridTooSmall { need: usize, got: usize },
    /// Two values built over different representation parameters were mixed.
    RepMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, max } => {
                write!(f, "index {index} out of range (max {max})")
            }
            Error::InvalidParams(what) => write!(f, "invalid parameters: {what}"),
            Error::GridTooSmall { need, got } => {
                write!(f, "grid too small: need at least {need} points per axis, got {got}")
            }
            Error::RepMismatch => write!(f, "operands use different representation parameters"),
        }
    }
}
