//! Graded Betti numbers of Stanley-Reisner rings of simplicial complexes and
//! matroids, computed exactly over prime fields through Hochster's formula.
//!
//! Besides the direct computation the crate provides the closed-form
//! passage from the Betti table of a `d`-dimensional complex to the table of
//! its `(d-1)`-skeleton ([`transfer`]), its matroid counterpart for
//! truncations, and checks for the consequences of these formulas.

pub mod betti;
pub mod bits;
pub mod cli;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod transfer;

pub use betti::{betti_numbers, betti_table, hochster, BettiTable, Convention, GradedBetti};
pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::{GfMatrix, HomologyProfile, Prime};
pub use matroid::Matroid;
pub use transfer::{transfer, TransferInput};
