//! Exact resolution of plane curve singularities by iterated blow-ups.
//!
//! The crate computes multiplicity sequences, delta invariants, conductor
//! degrees, genera and local intersection numbers of plane curves over Q,
//! prime fields and their finite extensions, and produces certificates
//! `H = A·F + B·G` for Noether's fundamental theorem.

pub mod error;
pub mod exactfield;
pub mod polyring;
pub mod blowup;
pub mod invariants;
pub mod noether;
pub mod cli;

pub use blowup::Limits;
pub use error::{Error, Result};
