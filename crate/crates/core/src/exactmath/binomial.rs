use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// `n!` for `n >= 0`.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// The symmetric binomial `B(a, b) = (a+b)! / (a! b!) = C(a+b, a)`.
///
/// `b = -1` is admitted and yields 0: it is the value the closed forms need at
/// `n = 1`, where `B(m, n-2)` appears. Under the usual convention
/// `C(x, k) = 0` for `x < k` this is just `C(a-1, a) = 0`; `B(0, -1)` is fixed
/// to 0 as well.
pub fn binomial_b(a: i64, b: i64) -> Result<BigInt> {
    if a < 0 {
        return Err(Error::invalid(format!("binomial_b: a = {a} must be >= 0")));
    }
    if b < -1 {
        return Err(Error::invalid(format!("binomial_b: b = {b} must be >= -1")));
    }
    if b == -1 {
        return Ok(BigInt::zero());
    }
    let top = BigInt::from(a) + BigInt::from(b);
    let k = a.min(b);
    // Running product stays integral: after step i it equals C(top - k + i, i).
    let base = &top - BigInt::from(k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * (&base + BigInt::from(i)) / BigInt::from(i);
    }
    Ok(acc)
}

/// `B(a, n - 1 + shift)` as a polynomial in `n`:
/// `prod_{j=0}^{a-1} (n + shift + j) / a!`.
///
/// Agrees with [`binomial_b`] at every integer `n` with `n - 1 + shift >= -1`.
pub fn binomial_poly(a: u32, shift: i64) -> Result<Polynomial> {
    if a < 1 {
        return Err(Error::invalid("binomial_poly: a must be >= 1"));
    }
    let mut p = Polynomial::one();
    for j in 0..i64::from(a) {
        p = &p * &Polynomial::from_integers(&[shift + j, 1]);
    }
    Ok(p.scale(&Rational::new(BigInt::one(), factorial(a.into()))))
}
