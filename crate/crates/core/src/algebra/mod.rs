//! Exact arithmetic in GF(p^k) and square matrices over it.

mod field;
mod matrix;

pub use field::{
    is_irreducible, is_prime, prime_power, smallest_irreducible, Code, Field, FieldElement,
    FieldSpec, MAX_FIELD_ORDER,
};
pub use matrix::{Matrix, MAX_DIM};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("unsupported matrix dimension {0}")]
    InvalidDimension(usize),
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
