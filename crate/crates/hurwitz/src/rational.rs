//! Exact rational numbers and their canonical textual form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The arbitrary-precision rational type used for every invariant.
pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as a rational.
pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form: `p/q` in lowest terms, or just `n` when integral.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True iff `r > 0`.
pub fn is_positive(r: &Rational) -> bool {
    r.numer().is_positive()
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}
