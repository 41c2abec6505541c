//! Exact multivariate polynomials over the rationals.

mod order;
mod poly;
mod ring;
mod text;

pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use ring::{Block, Ring, RingContext};
pub use text::{format, parse};

/// Exponent vector of a monomial; one entry per ring variable.
pub type ExponentVector = Vec<u16>;

/// Coefficient field element.
pub type Coefficient = crate::arith::RBig;
