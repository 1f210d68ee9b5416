//! Brute-force strong reality for small finite groups.
//!
//! A group element is *strongly real* when an involution (or the identity)
//! conjugates it to its inverse. This crate enumerates matrix and permutation
//! groups, decides strong reality class by class, checks the answers against
//! the known list of strongly real finite simple groups, and re-derives a set
//! of explicit matrix identities used in the proof that `3D4(q)` is strongly
//! real.

pub mod algebra;
pub mod groups;
pub mod classifier;
pub mod constructions;
pub mod reality;
pub mod paperchecks;
pub mod report;
