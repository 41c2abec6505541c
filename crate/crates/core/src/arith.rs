//! Thin helpers over the arbitrary-precision integer and rational types.

use dashu::base::{Gcd, Sign};
pub use dashu::integer::{IBig, UBig};
pub use dashu::rational::RBig;

/// Nonnegative gcd of two integers; `gcd(0, 0) = 0`.
pub fn gcd(a: &IBig, b: &IBig) -> IBig {
    IBig::from(a.gcd(b))
}

pub fn is_negative(a: &IBig) -> bool {
    a.sign() == Sign::Negative && !a.is_zero()
}

pub fn abs(a: &IBig) -> IBig {
    if is_negative(a) {
        -a
    } else {
        a.clone()
    }
}

pub fn rational_is_negative(a: &RBig) -> bool {
    is_negative(a.numerator())
}

pub fn lcm_u(a: &UBig, b: &UBig) -> UBig {
    if a.is_zero() || b.is_zero() {
        return UBig::ZERO;
    }
    let g: UBig = a.gcd(b);
    a / &g * b
}

pub fn int_to_rational(a: IBig) -> RBig {
    RBig::from(a)
}
