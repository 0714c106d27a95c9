//! Exact scalar and polynomial arithmetic.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; `BigRational`
//! keeps itself reduced with a positive denominator, so every [`Rational`] seen
//! by this crate is canonical. Polynomials and the binomial kernel live here.

mod binomial;
mod polynomial;

pub use binomial::{binomial_b, binomial_poly, factorial};
pub use num_bigint::BigInt;
pub use polynomial::Polynomial;

pub type Rational = num_rational::BigRational;

/// Lift an integer into [`Rational`].
pub fn rat(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Returns the integer value of `r`, or `None` if its denominator is not 1.
pub fn to_integer(r: &Rational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}
