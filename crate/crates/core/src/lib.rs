//! Exact evaluation of nested power sums
//!
//! ```text
//! S_m^(a)(n) = sum_{nu_a=1..n} ... sum_{nu_1=1..nu_2} nu_1^m
//! ```
//!
//! through the basis of psi polynomials `psi_m(n) = n + (m-1)(n-1) C(n+m-2, m-1)`.
//! Every psi polynomial has a closed form for its `a`-fold partial sum, so once
//! `n^m` is expanded in the psi basis the nesting order `a` costs nothing extra:
//!
//! ```text
//! S_m^(a)(n) = sum_k c_mk psi_k^(a)(n)
//! ```
//!
//! All arithmetic is exact (arbitrary precision integers and rationals).
//!
//! Module map:
//! - [`exactmath`]: big integers, rationals, dense polynomials, binomial kernel.
//! - [`psi`]: psi polynomials and their partial-sum series.
//! - [`coeffs`]: the monomial expansion matrix `A` and its inverse `C`.
//! - [`powersum`]: power sums, the brute-force oracle, simplicial numbers,
//!   Bernoulli numbers.
//! - [`cli`]: the `psisum` command-line front end.

pub mod cli;
pub mod coeffs;
mod error;
pub mod exactmath;
pub mod powersum;
pub mod psi;

pub use coeffs::{a_matrix, c_matrix, f_poly, verify_inverse, CoeffMatrix};
pub use error::{Error, Result};
pub use exactmath::{binomial_b, binomial_poly, BigInt, Polynomial, Rational};
pub use powersum::{
    bernoulli, bernoulli_from_pair, bernoulli_pairs, bernoulli_table, brute_force_power_sum,
    power_sum, power_sum_poly, power_sum_poly_with, power_sum_with, simplicial_number,
    PowerSumQuery,
};
pub use psi::{psi_a_poly, psi_a_recursive, psi_a_value, psi_value, PsiQuery};
