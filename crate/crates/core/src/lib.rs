//! Exact symbolic engine for convex hulls of real algebraic varieties.
//!
//! The crate computes projective dual varieties, k-tangency varieties and
//! the candidate algebraic boundary of the convex hull of a compact real
//! variety, all over the rationals with Gröbner-basis elimination.

pub mod arith;
pub mod boundary;
pub mod budget;
pub mod duality;
pub mod error;
pub mod groebner;
pub mod idealops;
pub mod polyring;
pub mod tangency;

pub use budget::Budget;
pub use error::{Error, Result};
pub use polyring::{format, parse, Coefficient, ExponentVector, MonomialOrder, Polynomial, Ring, RingContext};
