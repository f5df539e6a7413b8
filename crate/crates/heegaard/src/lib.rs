//! Exact verification engine for the Heegaard quantum 3-sphere and its
//! weighted circle actions.
//!
//! The crate implements the coordinate *-algebra of the Heegaard quantum
//! 3-sphere as a normal-form rewriting engine over exact Laurent
//! coefficients, builds the quantum weighted Heegaard sphere algebras fixed
//! by weighted circle coactions, constructs principal circle bundles with
//! strong connections and the idempotents of the associated line bundles,
//! and evaluates the Chern-Connes pairing exactly, together with a numeric
//! layer of truncated Hilbert-space representations used for cross-checks.
//!
//! The crate is `no_std` (with `alloc`); all IO, CLI and report formats live
//! in the companion `heegaard-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bundle;
pub mod check;
pub mod chern;
pub mod matrix;
pub mod rep;
pub mod scalar;
pub mod sphere;

pub use algebra::{AlgebraElement, Grading, Letter, Monomial, Word};
pub use scalar::ScalarElement;
pub use sphere::WeightPair;
