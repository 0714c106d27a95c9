//! Oracle sweep: every `S_m^(a)(n)` on a grid against the literal nested sum,
//! plus the `A C = C A = I` identity.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coeffs::{a_matrix, c_matrix, verify_inverse, CoeffMatrix};
use crate::error::Result;
use crate::powersum::{brute_force_power_sum, power_sum_with, PowerSumQuery};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub m_max: u32,
    pub a_max: u32,
    pub n_max: u64,
    pub queries: usize,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Deterministic part of the report; timing is left to the caller.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verify: 0 <= m <= {}, 0 <= a <= {}, 0 <= n <= {}",
            self.m_max, self.a_max, self.n_max
        )?;
        writeln!(f, "queries checked: {}", self.queries)?;
        for m in &self.mismatches {
            writeln!(
                f,
                "mismatch at {}: expected {}, got {}",
                m.check, m.expected, m.got
            )?;
        }
        writeln!(f, "mismatches: {}", self.mismatches.len())?;
        writeln!(f, "{}", if self.success() { "OK" } else { "FAILED" })
    }
}

/// Sweep with the genuine coefficient matrix.
pub fn verify(m_max: u32, a_max: u32, n_max: u64) -> Result<VerifyReport> {
    let c = c_matrix(m_max.max(2) as usize)?;
    verify_with(&c, m_max, a_max, n_max)
}

/// Sweep against a caller-supplied `C`, which must cover `max(m_max, 2)`.
pub fn verify_with(c: &CoeffMatrix, m_max: u32, a_max: u32, n_max: u64) -> Result<VerifyReport> {
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut queries = 0;

    let dim = m_max.max(2) as usize;
    let c = c.truncate(dim)?;
    if !verify_inverse(&a_matrix(dim)?, &c)? {
        mismatches.push(Mismatch {
            check: format!("A*C = C*A = I (m_max = {dim})"),
            expected: "identity".into(),
            got: "not identity".into(),
        });
    }

    for m in 0..=m_max {
        for a in 0..=a_max {
            for n in 0..=n_max {
                queries += 1;
                let q = PowerSumQuery::new(m, a, n);
                let expected = brute_force_power_sum(m, a, n);
                let got = match power_sum_with(&c, m, a, n) {
                    Ok(v) if v == expected => continue,
                    Ok(v) => v.to_string(),
                    Err(e) => e.to_string(),
                };
                mismatches.push(Mismatch {
                    check: q.to_string(),
                    expected: expected.to_string(),
                    got,
                });
            }
        }
    }

    Ok(VerifyReport {
        m_max,
        a_max,
        n_max,
        queries,
        mismatches,
        elapsed: start.elapsed(),
    })
}
