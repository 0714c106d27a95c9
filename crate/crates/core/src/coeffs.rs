//! Basis change between monomials `{n^k}` and psi polynomials `{psi_k}`, `2 <= k <= m`.
//!
//! Row `mu` of `A` holds the monomial coefficients of `psi_mu`; row `mu` of `C`
//! holds the psi-basis coefficients of `n^mu`. Both are lower triangular and
//! mutually inverse. `A` comes from expanding `f_mu(n) = (n-1) n (n+1) ... (n+mu-2)`,
//! since `psi_mu(n) = n + f_mu(n) / (mu-2)!`; `C` is produced row by row from `A`
//! by forward substitution.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{factorial, Polynomial, Rational};

/// Square rational matrix over the index range `2..=m_max` (both axes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    m_max: usize,
    entries: Vec<Rational>,
}

impl CoeffMatrix {
    fn zeros(m_max: usize) -> Self {
        let d = m_max - 1;
        CoeffMatrix {
            m_max,
            entries: vec![Rational::zero(); d * d],
        }
    }

    pub fn identity(m_max: usize) -> Result<Self> {
        check_m_max(m_max)?;
        let mut id = Self::zeros(m_max);
        for mu in 2..=m_max {
            *id.slot(mu, mu) = Rational::one();
        }
        Ok(id)
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    fn dim(&self) -> usize {
        self.m_max - 1
    }

    fn index(&self, mu: usize, kappa: usize) -> usize {
        assert!(
            (2..=self.m_max).contains(&mu) && (2..=self.m_max).contains(&kappa),
            "index ({mu}, {kappa}) outside 2..={}",
            self.m_max
        );
        (mu - 2) * self.dim() + (kappa - 2)
    }

    fn slot(&mut self, mu: usize, kappa: usize) -> &mut Rational {
        let i = self.index(mu, kappa);
        &mut self.entries[i]
    }

    /// Entry `(mu, kappa)`; both indices must lie in `2..=m_max`.
    pub fn get(&self, mu: usize, kappa: usize) -> &Rational {
        &self.entries[self.index(mu, kappa)]
    }

    /// Entries `(mu, 2..=mu)`: the lower-triangular part of row `mu`.
    pub fn row(&self, mu: usize) -> &[Rational] {
        let start = self.index(mu, 2);
        &self.entries[start..start + mu - 1]
    }

    /// The leading block over `2..=m`.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        check_m_max(m)?;
        if m > self.m_max {
            return Err(Error::DimensionMismatch {
                left: m,
                right: self.m_max,
            });
        }
        let mut out = Self::zeros(m);
        for mu in 2..=m {
            for kappa in 2..=m {
                *out.slot(mu, kappa) = self.get(mu, kappa).clone();
            }
        }
        Ok(out)
    }

    /// Copy with one entry replaced. Used to inject faults when testing the
    /// verification paths.
    pub fn with_entry(mut self, mu: usize, kappa: usize, value: Rational) -> Result<Self> {
        if !(2..=self.m_max).contains(&mu) || !(2..=self.m_max).contains(&kappa) {
            return Err(Error::invalid(format!(
                "entry ({mu}, {kappa}) outside 2..={}",
                self.m_max
            )));
        }
        *self.slot(mu, kappa) = value;
        Ok(self)
    }

    pub fn product(&self, rhs: &CoeffMatrix) -> Result<CoeffMatrix> {
        if self.m_max != rhs.m_max {
            return Err(Error::DimensionMismatch {
                left: self.m_max,
                right: rhs.m_max,
            });
        }
        let mut out = Self::zeros(self.m_max);
        for mu in 2..=self.m_max {
            for nu in 2..=self.m_max {
                let mut acc = Rational::zero();
                for kappa in 2..=self.m_max {
                    let l = self.get(mu, kappa);
                    if !l.is_zero() {
                        acc += l * rhs.get(kappa, nu);
                    }
                }
                *out.slot(mu, nu) = acc;
            }
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        (2..=self.m_max).all(|mu| {
            (2..=self.m_max).all(|kappa| {
                let e = self.get(mu, kappa);
                if mu == kappa {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_lower_triangular(&self) -> bool {
        (2..=self.m_max).all(|mu| (mu + 1..=self.m_max).all(|kappa| self.get(mu, kappa).is_zero()))
    }
}

/// Rows separated by newlines, lower-triangular entries separated by spaces.
impl fmt::Display for CoeffMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mu in 2..=self.m_max {
            let line: Vec<String> = self.row(mu).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn check_m_max(m_max: usize) -> Result<()> {
    if m_max < 2 {
        return Err(Error::invalid(format!("m_max = {m_max} must be >= 2")));
    }
    Ok(())
}

/// `f_m(n) = prod_{k=-1}^{m-2} (n + k)`, monic of degree `m` with roots `1, 0, -1, ..., 2-m`.
/// Its coefficient of `n^k` is `b_{m,k}`.
pub fn f_poly(m: usize) -> Result<Polynomial> {
    if m < 2 {
        return Err(Error::invalid(format!("f_poly: m = {m} must be >= 2")));
    }
    let top = i64::try_from(m).map_err(|_| Error::invalid("f_poly: m too large"))? - 2;
    Ok((-1..=top).fold(Polynomial::one(), |acc, k| {
        &acc * &Polynomial::from_integers(&[k, 1])
    }))
}

/// `a_{mu,k} = b_{mu,k} / (mu-2)! + [k = 1]` for `2 <= k <= mu <= m_max`.
///
/// The coefficients of `n^0` and `n^1` in `psi_mu` vanish (`b_{mu,0} = 0`,
/// `b_{mu,1} = -(mu-2)!`); this is checked rather than assumed.
pub fn a_matrix(m_max: usize) -> Result<CoeffMatrix> {
    check_m_max(m_max)?;
    let mut a = CoeffMatrix::zeros(m_max);
    for mu in 2..=m_max {
        let scale = Rational::new(BigInt::one(), factorial(mu as u64 - 2));
        let psi = &Polynomial::variable() + &f_poly(mu)?.scale(&scale);
        if !psi.coeff(0).is_zero() || !psi.coeff(1).is_zero() {
            return Err(Error::Inconsistent(format!(
                "psi_{mu} has nonzero coefficient below n^2"
            )));
        }
        for k in 2..=mu {
            *a.slot(mu, k) = psi.coeff(k);
        }
    }
    Ok(a)
}

/// Lower-triangular inverse of [`a_matrix`] by the row recursion
///
/// ```text
/// c_{mm} = (m-2)!
/// c_{ml} = -(m-2)! * sum_{k=l}^{m-1} a_{mk} c_{kl}     (2 <= l < m)
/// ```
///
/// Every `c_{mk}` is expected to be an integer; a fractional entry is returned
/// as [`Error::NonIntegral`].
pub fn c_matrix(m_max: usize) -> Result<CoeffMatrix> {
    let a = a_matrix(m_max)?;
    let mut c = CoeffMatrix::zeros(m_max);
    for m in 2..=m_max {
        let diag = Rational::from_integer(factorial(m as u64 - 2));
        for l in 2..m {
            let mut acc = Rational::zero();
            for k in l..m {
                acc += a.get(m, k) * c.get(k, l);
            }
            *c.slot(m, l) = -(&diag * acc);
        }
        *c.slot(m, m) = diag;
        if let Some((l, bad)) = c.row(m).iter().enumerate().find(|(_, v)| !v.is_integer()) {
            return Err(Error::NonIntegral {
                context: format!("c_{{{m},{}}}", l + 2),
                value: bad.clone(),
            });
        }
    }
    Ok(c)
}

/// True iff `A C` and `C A` are both the identity on `2..=m_max`.
pub fn verify_inverse(a: &CoeffMatrix, c: &CoeffMatrix) -> Result<bool> {
    Ok(a.product(c)?.is_identity() && c.product(a)?.is_identity())
}
