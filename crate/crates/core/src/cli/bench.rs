//! Timing of the closed form against the literal nested sum.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::powersum::{brute_force_power_sum, power_sum, PowerSumQuery};

/// Oracle runs visiting more multi-indices than this are skipped.
pub const ORACLE_TERM_LIMIT: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    ClosedForm,
    NestedSum,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::ClosedForm => "closed_form",
            Strategy::NestedSum => "nested_sum",
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub strategy: Strategy,
    pub query: PowerSumQuery,
    pub value: BigInt,
    pub median: Duration,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "strategy,m,a,n,value,median_ns";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.strategy.name(),
            self.query.m,
            self.query.a,
            self.query.n,
            self.value,
            self.median.as_nanos()
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchOutcome {
    pub rows: Vec<BenchRow>,
    /// Queries whose oracle row was skipped for exceeding [`ORACLE_TERM_LIMIT`].
    pub skipped: Vec<PowerSumQuery>,
}

fn timed<F: FnMut() -> Result<BigInt>>(reps: u32, mut f: F) -> Result<(BigInt, Duration)> {
    let mut times = Vec::with_capacity(reps as usize);
    let mut value = None;
    for _ in 0..reps {
        let t = Instant::now();
        let v = f()?;
        times.push(t.elapsed());
        value = Some(v);
    }
    times.sort();
    Ok((value.expect("reps >= 1"), times[times.len() / 2]))
}

/// Runs both strategies on every `n`. Fails with [`Error::Inconsistent`] as soon
/// as the two disagree.
pub fn bench(m: u32, a: u32, ns: &[u64], reps: u32) -> Result<BenchOutcome> {
    if reps < 1 {
        return Err(Error::invalid("repetitions must be >= 1"));
    }
    let mut out = BenchOutcome::default();
    for &n in ns {
        let query = PowerSumQuery::new(m, a, n);
        let (value, median) = timed(reps, || power_sum(m, a, n))?;
        out.rows.push(BenchRow {
            strategy: Strategy::ClosedForm,
            query,
            value: value.clone(),
            median,
        });
        if query.oracle_terms() > BigInt::from(ORACLE_TERM_LIMIT) {
            out.skipped.push(query);
            continue;
        }
        let (oracle, median) = timed(reps, || Ok(brute_force_power_sum(m, a, n)))?;
        if oracle != value {
            return Err(Error::Inconsistent(format!(
                "S{query}: closed form {value} vs nested sum {oracle}"
            )));
        }
        out.rows.push(BenchRow {
            strategy: Strategy::NestedSum,
            query,
            value: oracle,
            median,
        });
    }
    Ok(out)
}
