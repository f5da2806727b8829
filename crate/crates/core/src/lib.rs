//! Generalized Kloosterman sums `K(a, b, m, Λ) = Σ_{u ∈ Λ} e((a·u + b·u⁻¹)/m)`.
//!
//! This crate is `no_std` (it needs `alloc`) and contains the arithmetic,
//! the sum evaluators, the identity and bound checks built on them, the
//! hypocycloid geometry, the equidistribution diagnostics and the
//! Lucas/Fibonacci machinery. File formats, threading and the command-line
//! driver live in the `gks` crate.
//!
//! Moduli are limited to [`MAX_MODULUS`] (2³¹) so that every product of two
//! residues fits in 64 bits.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
mod sum;

pub mod color;
pub mod equidistribution;
pub mod geometry;
pub mod kloosterman;
pub mod lucas;
pub mod modular;

pub use error::{Error, Result};
pub use kloosterman::{ComplexValue, RootTable, RowExecutor, Sequential, SumEvaluator, SumGrid};
pub use modular::{Factorization, UnitSubgroup};
pub use sum::CompensatedSum;

/// Exclusive upper bound on every modulus accepted by the crate.
pub const MAX_MODULUS: u64 = 1 << 31;
