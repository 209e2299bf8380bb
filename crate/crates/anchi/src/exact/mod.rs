//! Arbitrary-precision arithmetic substrate: rationals, dense polynomials,
//! rational functions with power-series expansion, and quasi-polynomials.
//!
//! All values are immutable after construction and every operation is pure,
//! so everything here is safe to use from multiple threads.

mod error;
mod polynomial;
mod qpoly;
mod ratfun;

pub use error::ExactError;
pub use polynomial::Polynomial;
pub use qpoly::QuasiPolynomial;
pub use ratfun::RationalFunction;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational. `BigRational` keeps values in lowest terms
/// with a positive denominator on every construction, which makes equality
/// structural and keeps coefficient growth bounded.
///
/// Rationals render as `p/q`, or just `p` when the denominator is one, and
/// parse back from the same form.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a [`Rational`].
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;
    use std::str::FromStr;

    #[test]
    fn rational_string_form() {
        assert_eq!(rat(3, 6).to_string(), "1/2");
        assert_eq!(rat(-4, 2).to_string(), "-2");
        assert_eq!(rat(7, 1).to_string(), "7");
        assert_eq!(Rational::from_str("22/7").unwrap(), rat(22, 7));
        assert_eq!(Rational::from_str("-5").unwrap(), rat_int(-5));
    }

    #[test]
    fn rational_is_normalized() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert!(r.denom() > &Int::from(0));
        assert!(rat(4, 2).is_integer());
        assert!(Rational::one().is_integer());
    }

    proptest! {
        // (a/b + c/d) * (b*d) == a*d + c*b, exercised on random inputs.
        #[test]
        fn addition_is_exact(a in -500i64..500, b in 1i64..60, c in -500i64..500, d in 1i64..60) {
            let lhs = (rat(a, b) + rat(c, d)) * rat_int(b * d);
            prop_assert_eq!(lhs, rat_int(a * d + c * b));
        }

        #[test]
        fn multiplication_is_exact(a in -500i64..500, b in 1i64..60, c in -500i64..500, d in 1i64..60) {
            let lhs = (rat(a, b) * rat(c, d)) * rat_int(b * d);
            prop_assert_eq!(lhs, rat_int(a * c));
        }
    }
}
