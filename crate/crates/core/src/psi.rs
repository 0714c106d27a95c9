//! The psi polynomials and their partial-sum series.
//!
//! `psi_m(n) = n + (m-1)(n-1) B(m-1, n-1)` coincides with `n^m` for
//! `m in {1, 2, 3}` and departs from it afterwards (`psi_4(2) = 14`). The series
//! of order `a` is the `a`-fold partial sum, `psi_m^(a)(n) = sum_{nu=1..n}
//! psi_m^(a-1)(nu)`, with `psi_m^(0) = psi_m`. It has the closed form
//!
//! ```text
//! psi_m^(a)(n) = B(a+1, n-1) + m(m-1)/(m+a) * (n-1) * B(m+a-1, n-1)
//! ```
//!
//! which is what [`psi_a_value`] and [`psi_a_poly`] evaluate. [`psi_a_recursive`]
//! performs the summation literally and is kept as an oracle.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binomial_b, binomial_poly, to_integer, Polynomial, Rational};

/// Indices `(m, a, n)` of `psi_m^(a)(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PsiQuery {
    m: u32,
    a: u32,
    n: u64,
}

impl PsiQuery {
    pub fn new(m: u32, a: u32, n: u64) -> Result<Self> {
        check_m(m)?;
        check_n(n)?;
        Ok(PsiQuery { m, a, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> BigInt {
        closed_form(self.m, self.a, self.n).expect("validated psi query")
    }
}

fn check_m(m: u32) -> Result<()> {
    if m < 1 {
        return Err(Error::invalid("psi: m must be >= 1"));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<i64> {
    if n < 1 {
        return Err(Error::invalid("psi: n must be >= 1"));
    }
    i64::try_from(n).map_err(|_| Error::invalid(format!("psi: n = {n} exceeds i64 range")))
}

/// `psi_m(n)`.
pub fn psi_value(m: u32, n: u64) -> Result<BigInt> {
    check_m(m)?;
    let ni = check_n(n)?;
    let m = i64::from(m);
    Ok(BigInt::from(ni) + BigInt::from((m - 1) * (ni - 1)) * binomial_b(m - 1, ni - 1)?)
}

/// `psi_m^(a)(n)` by the closed form.
///
/// The prefactor `m(m-1)/(m+a)` is generally fractional, so the sum is formed
/// in rationals and its integrality checked before returning; a non-integer
/// result is reported as [`Error::NonIntegral`].
pub fn psi_a_value(m: u32, a: u32, n: u64) -> Result<BigInt> {
    check_m(m)?;
    check_n(n)?;
    closed_form(m, a, n)
}

fn closed_form(m: u32, a: u32, n: u64) -> Result<BigInt> {
    let ni = check_n(n)?;
    let (m, a) = (i64::from(m), i64::from(a));
    let head = binomial_b(a + 1, ni - 1)?;
    if m == 1 {
        return Ok(head);
    }
    let tail = Rational::new(
        BigInt::from(m * (m - 1) * (ni - 1)) * binomial_b(m + a - 1, ni - 1)?,
        BigInt::from(m + a),
    );
    let total = Rational::from_integer(head) + tail;
    to_integer(&total).ok_or_else(|| Error::NonIntegral {
        context: format!("psi_{m}^({a})({n})"),
        value: total,
    })
}

/// `psi_m^(a)(n)` by literal repeated partial summation of `psi_m(1..=n)`.
///
/// Costs `O(a * n)` big-integer additions plus `n` evaluations of `psi_m`;
/// use it as a check, not for large `n`.
pub fn psi_a_recursive(m: u32, a: u32, n: u64) -> Result<BigInt> {
    check_m(m)?;
    check_n(n)?;
    let mut level = (1..=n)
        .map(|nu| psi_value(m, nu))
        .collect::<Result<Vec<_>>>()?;
    for _ in 0..a {
        let mut running = BigInt::zero();
        for v in level.iter_mut() {
            running += &*v;
            *v = running.clone();
        }
    }
    Ok(level.pop().expect("n >= 1"))
}

/// `psi_m^(a)` as a polynomial of degree `m + a` in `n`.
pub fn psi_a_poly(m: u32, a: u32) -> Result<Polynomial> {
    check_m(m)?;
    let head = binomial_poly(a + 1, 0)?;
    if m == 1 {
        return Ok(head);
    }
    let (mi, ai) = (i64::from(m), i64::from(a));
    let prefactor = Rational::new(BigInt::from(mi * (mi - 1)), BigInt::from(mi + ai));
    let n_minus_one = Polynomial::from_integers(&[-1, 1]);
    let tail = &n_minus_one * &binomial_poly(m + a - 1, 0)?;
    Ok(&head + &tail.scale(&prefactor))
}
