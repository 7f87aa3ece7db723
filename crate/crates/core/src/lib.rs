//! Braid groups and factorization semigroups over them.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`]: words in `B_m`, Garside normal forms, conjugacy.
//! * [`free`]: free groups, the Artin action and an independent word-problem oracle.
//! * [`factor`]: factorizations, Hurwitz moves and orbit search, stable equivalence.
//! * [`marked`]: factors with marked free strands, interlacing numbers, inseparability.
//! * [`curve`]: braid monodromy factorizations and van Kampen presentations.

pub mod braid;
pub mod budget;
pub mod curve;
pub mod error;
pub mod factor;
pub mod free;
pub mod marked;

pub use budget::Budget;
pub use error::{Error, Result};
