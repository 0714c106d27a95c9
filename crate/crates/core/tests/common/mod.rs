//! Test-only oracles, independent of the library's evaluation paths.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use psisum::Rational;

pub fn q(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

/// `C(n, k)` by the multiplicative formula; 0 when `k > n`.
pub fn choose(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Gauss-Jordan elimination over the rationals; returns `None` if singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut().chain(b[col].iter_mut()) {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (pivot_a, pivot_b) = (a[col].clone(), b[col].clone());
            for (x, p) in a[r].iter_mut().zip(&pivot_a) {
                *x -= &factor * p;
            }
            for (x, p) in b[r].iter_mut().zip(&pivot_b) {
                *x -= &factor * p;
            }
        }
    }
    Some(b)
}

pub fn inverse(a: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let id = (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect();
    solve(a, id)
}

/// `B_i` (with `B_1 = +1/2`) as the coefficient of `n` in the polynomial
/// through the brute-force values of `sum_{nu<=n} nu^i`, `n = 1..=i+1`.
pub fn bernoulli_oracle(i: u32) -> Rational {
    let size = i as usize + 1;
    let vander: Vec<Vec<Rational>> = (1..=size as u64)
        .map(|n| {
            (1..=size as u32)
                .map(|p| q(BigInt::from(n).pow(p)))
                .collect()
        })
        .collect();
    let rhs: Vec<Vec<Rational>> = (1..=size as u64)
        .map(|n| vec![q((1..=n).map(|nu| BigInt::from(nu).pow(i)).sum::<BigInt>())])
        .collect();
    let coeffs = solve(vander, rhs).expect("Vandermonde is regular");
    coeffs[0][0].clone()
}

/// Closed forms in factored shape, evaluated exactly.
pub fn sum_squares(n: i64) -> Rational {
    Rational::new(BigInt::from(n * (n + 1) * (2 * n + 1)), 6.into())
}

pub fn sum_cubes(n: i64) -> Rational {
    let t = Rational::new(BigInt::from(n * (n + 1)), 2.into());
    &t * &t
}

pub fn sum_fourth(n: i64) -> Rational {
    let n = BigInt::from(n);
    let inner = 6 * n.pow(4) + 15 * n.pow(3) + 10 * n.pow(2) - 1;
    Rational::new(n * inner, 30.into())
}

pub fn sum_fifth(n: i64) -> Rational {
    let n = BigInt::from(n);
    let n1: BigInt = &n + 1;
    let inner = 2 * n.pow(2) + 2 * &n - 1;
    Rational::new(n.pow(2) * n1.pow(2) * inner, 12.into())
}

pub fn second_order_eighth(n: i64) -> Rational {
    let n = BigInt::from(n);
    let f1 = 2 * n.pow(2) + 4 * &n - 1;
    let f2 = n.pow(4) + 4 * n.pow(3) + n.pow(2) - 6 * &n + 3;
    let (n1, n2): (BigInt, BigInt) = (&n + 1, &n + 2);
    Rational::new(&n * n1.pow(2) * n2 * f1 * f2, 180.into())
}
