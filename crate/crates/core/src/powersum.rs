//! Nested power sums `S_m^(a)(n)`, their polynomial forms, and Bernoulli numbers.
//!
//! For `m >= 2` the value is `sum_{k=2}^m c_mk psi_k^(a)(n)`: expanding `n^m` in
//! the psi basis lets every one of the `a` summations pass onto the basis
//! functions. Exponents 0 and 1 are simplicial numbers, `S_0^(a)(n) = B(a, n-1)`
//! and `S_1^(a)(n) = B(a+1, n-1)`. Every sum over an empty range (`n = 0`) is 0.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffs::{c_matrix, CoeffMatrix};
use crate::error::{Error, Result};
use crate::exactmath::{binomial_b, binomial_poly, factorial, to_integer, Polynomial, Rational};
use crate::psi::{psi_a_poly, psi_a_value};

/// Indices `(m, a, n)` of `S_m^(a)(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PowerSumQuery {
    pub m: u32,
    pub a: u32,
    pub n: u64,
}

impl PowerSumQuery {
    pub fn new(m: u32, a: u32, n: u64) -> Self {
        PowerSumQuery { m, a, n }
    }

    pub fn evaluate(&self) -> Result<BigInt> {
        power_sum(self.m, self.a, self.n)
    }

    /// Number of terms the literal nested sum visits, `B(a, n-1) = C(n+a-1, a)`.
    pub fn oracle_terms(&self) -> BigInt {
        if self.n == 0 {
            return BigInt::zero();
        }
        binomial_b(self.a.into(), self.n as i64 - 1).expect("in domain")
    }
}

impl std::fmt::Display for PowerSumQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.m, self.a, self.n)
    }
}

// Grows monotonically; any prefix of a larger C matrix equals the smaller one,
// so callers see identical results whether or not the memo is warm.
static C_MEMO: RwLock<Option<Arc<CoeffMatrix>>> = RwLock::new(None);

fn shared_c_matrix(m: usize) -> Result<Arc<CoeffMatrix>> {
    if let Some(c) = C_MEMO.read().expect("memo poisoned").as_ref() {
        if c.m_max() >= m {
            return Ok(Arc::clone(c));
        }
    }
    let fresh = Arc::new(c_matrix(m)?);
    let mut slot = C_MEMO.write().expect("memo poisoned");
    match slot.as_ref() {
        Some(c) if c.m_max() >= m => Ok(Arc::clone(c)),
        _ => {
            *slot = Some(Arc::clone(&fresh));
            Ok(fresh)
        }
    }
}

fn n_as_i64(n: u64) -> Result<i64> {
    i64::try_from(n).map_err(|_| Error::invalid(format!("n = {n} exceeds i64 range")))
}

/// `S_m^(a)(n)`.
pub fn power_sum(m: u32, a: u32, n: u64) -> Result<BigInt> {
    if m >= 2 && a > 0 && n > 0 {
        let c = shared_c_matrix(m as usize)?;
        return power_sum_with(&c, m, a, n);
    }
    small_cases(m, a, n).expect("every remaining case is direct")
}

fn small_cases(m: u32, a: u32, n: u64) -> Option<Result<BigInt>> {
    if n == 0 {
        return Some(Ok(BigInt::zero()));
    }
    if a == 0 {
        return Some(Ok(BigInt::from(n).pow(m)));
    }
    let last = match n_as_i64(n) {
        Ok(v) => v - 1,
        Err(e) => return Some(Err(e)),
    };
    match m {
        0 => Some(binomial_b(a.into(), last)),
        1 => Some(binomial_b(i64::from(a) + 1, last)),
        _ => None,
    }
}

/// `S_m^(a)(n)` using the supplied psi-basis coefficients for `m >= 2`.
///
/// `c` must cover row `m`. Passing a deliberately altered matrix is how the
/// verification sweep is fault-tested. The psi-basis sum is formed in
/// rationals and must come out integral.
pub fn power_sum_with(c: &CoeffMatrix, m: u32, a: u32, n: u64) -> Result<BigInt> {
    if let Some(direct) = small_cases(m, a, n) {
        return direct;
    }
    let mu = m as usize;
    if c.m_max() < mu {
        return Err(Error::DimensionMismatch {
            left: mu,
            right: c.m_max(),
        });
    }
    let mut total = Rational::zero();
    for (k, coeff) in (2..=m).zip(c.row(mu)) {
        if !coeff.is_zero() {
            total += coeff * Rational::from_integer(psi_a_value(k, a, n)?);
        }
    }
    to_integer(&total).ok_or_else(|| Error::NonIntegral {
        context: format!("S_{m}^({a})({n})"),
        value: total,
    })
}

/// `S_m^(a)` as a polynomial in `n` of degree `m + a`, vanishing at `n = 0`.
///
/// The one exception is `(m, a) = (0, 0)`: the bare `n^0` is the constant 1,
/// which agrees with [`power_sum`] only for `n >= 1`.
pub fn power_sum_poly(m: u32, a: u32) -> Result<Polynomial> {
    if m >= 2 {
        let c = shared_c_matrix(m as usize)?;
        return power_sum_poly_with(&c, m, a);
    }
    power_sum_poly_small(m, a).expect("m < 2")
}

fn power_sum_poly_small(m: u32, a: u32) -> Option<Result<Polynomial>> {
    match (m, a) {
        (0, 0) => Some(Ok(Polynomial::one())),
        (0, _) => Some(binomial_poly(a, 0)),
        (1, _) => Some(binomial_poly(a + 1, 0)),
        _ => None,
    }
}

pub fn power_sum_poly_with(c: &CoeffMatrix, m: u32, a: u32) -> Result<Polynomial> {
    if let Some(p) = power_sum_poly_small(m, a) {
        return p;
    }
    let mu = m as usize;
    if c.m_max() < mu {
        return Err(Error::DimensionMismatch {
            left: mu,
            right: c.m_max(),
        });
    }
    let mut total = Polynomial::zero();
    for (k, coeff) in (2..=m).zip(c.row(mu)) {
        if !coeff.is_zero() {
            total = &total + &psi_a_poly(k, a)?.scale(coeff);
        }
    }
    Ok(total)
}

/// `S_m^(a)(n)` by visiting every multi-index `n >= nu_a >= ... >= nu_1 >= 1`.
///
/// Work is proportional to `C(n+a-1, a)`; intended as the reference for small
/// arguments only.
pub fn brute_force_power_sum(m: u32, a: u32, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let powers: Vec<BigInt> = (0..=n).map(|nu| BigInt::from(nu).pow(m)).collect();
    nested(&powers, a, n)
}

fn nested(powers: &[BigInt], depth: u32, upper: u64) -> BigInt {
    if depth == 0 {
        return powers[upper as usize].clone();
    }
    let mut acc = BigInt::zero();
    for nu in 1..=upper {
        acc += nested(powers, depth - 1, nu);
    }
    acc
}

/// The simplicial `a`-polytopic number `sigma_a(n) = (n+a-1)! / ((n-1)! a!)`.
pub fn simplicial_number(a: u32, n: u64) -> Result<BigInt> {
    if a < 1 {
        return Err(Error::invalid("simplicial_number: a must be >= 1"));
    }
    if n < 1 {
        return Err(Error::invalid("simplicial_number: n must be >= 1"));
    }
    binomial_b(a.into(), n_as_i64(n)? - 1)
}

/// `B_i` with the convention `B_1 = +1/2`.
///
/// Read off the psi-basis expansion of `S_m^(1)`: with `g_kj` the coefficient
/// of `n^j` in `psi_k^(1)`,
///
/// ```text
/// B_{m-j+1} = (m-j+1)! j! / m! * sum_{k=2}^m c_mk g_kj
/// ```
///
/// using `m = max(i+1, 2)` and `j = m - i + 1`.
pub fn bernoulli(i: u32) -> Result<Rational> {
    let m = (i + 1).max(2);
    bernoulli_from_pair(m, m - i + 1)
}

/// `B_{m-j+1}` from the specific pair `(m, j)`; requires `m >= 2` and `1 <= j <= m+1`.
pub fn bernoulli_from_pair(m: u32, j: u32) -> Result<Rational> {
    if m < 2 {
        return Err(Error::invalid(format!(
            "bernoulli_from_pair: m = {m} must be >= 2"
        )));
    }
    if j < 1 || j > m + 1 {
        return Err(Error::invalid(format!(
            "bernoulli_from_pair: j = {j} outside 1..={}",
            m + 1
        )));
    }
    let c = shared_c_matrix(m as usize)?;
    let mut inner = Rational::zero();
    for (k, coeff) in (2..=m).zip(c.row(m as usize)) {
        inner += coeff * psi_a_poly(k, 1)?.coeff(j as usize);
    }
    let weight = Rational::new(
        factorial(u64::from(m + 1 - j)) * factorial(j.into()),
        factorial(m.into()),
    );
    Ok(weight * inner)
}

/// Every `(m, j)` pair that determines `B_i`, for `m` up to `m_limit`.
pub fn bernoulli_pairs(i: u32, m_limit: u32) -> Vec<(u32, u32)> {
    (i.max(2)..=m_limit).map(|m| (m, m - i + 1)).collect()
}

/// `B_0 ..= B_{i_max}`.
pub fn bernoulli_table(i_max: u32) -> Result<Vec<Rational>> {
    (0..=i_max).map(bernoulli).collect()
}
