//! Finite groups by exhaustive enumeration: closure from generators,
//! conjugacy classes, centralizers, involutions and projective quotients.

mod element;
mod group;

pub use element::{GroupElement, Permutation, ScalarSubgroup};
pub use group::{ConjugacyClass, Group, DEFAULT_CAP};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the element cap after {0} elements")]
    CapExceeded(usize),
    #[error("generators do not share one element type")]
    TypeMismatch,
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
}
