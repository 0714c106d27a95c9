//! The `psisum` command line.
//!
//! Exit codes: 0 success, 1 verification or benchmark mismatch (or an internal
//! consistency failure), 2 usage error. Results go to stdout, diagnostics to
//! stderr.

mod bench;
mod render;
mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coeffs::{a_matrix, c_matrix};
use crate::error::Error;
use crate::exactmath::Rational;
use crate::powersum::{bernoulli_table, power_sum, power_sum_poly, PowerSumQuery};
use crate::psi::psi_a_poly;

pub use bench::{bench, BenchOutcome, BenchRow, Strategy, ORACLE_TERM_LIMIT};
pub use render::{
    latex_polynomial, render_bernoulli, render_matrix, render_polynomial, render_value,
    OutputFormat, PolyJson, RationalPair,
};
pub use verify::{verify, verify_with, Mismatch, VerifyReport};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "psisum",
    version,
    about = "Exact nested power sums via the psi-polynomial basis"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Monomial coefficients of psi_mu
    #[value(name = "A", alias = "a")]
    A,
    /// Psi-basis coefficients of n^mu
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate S_m^(a)(n)
    Eval {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'a')]
        a: u32,
        #[arg(short = 'n')]
        n: u64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print S_m^(a) (or psi_m^(a) with --psi) as a polynomial in n
    Poly {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'a')]
        a: u32,
        #[arg(long)]
        psi: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the lower-triangular coefficient matrix A or C over 2..=M
    Coeffs {
        #[arg(short = 'M')]
        m_max: usize,
        #[arg(long, value_enum, default_value = "C")]
        which: Which,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print Bernoulli numbers B_0..=B_i (convention B_1 = +1/2)
    Bernoulli {
        #[arg(short = 'i')]
        i_max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check every S_m^(a)(n) on the grid against the nested-sum oracle
    Verify {
        #[arg(short = 'M')]
        m_max: u32,
        #[arg(short = 'A')]
        a_max: u32,
        #[arg(short = 'N')]
        n_max: u64,
        /// Overwrite C entry MU,KAPPA with VALUE before checking (fault injection)
        #[arg(long, hide = true, value_name = "MU,KAPPA,VALUE")]
        inject: Option<String>,
    },
    /// Time the closed form against the nested sum (CSV)
    Bench {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'a')]
        a: u32,
        #[arg(short = 'n', value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_SUCCESS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "psisum: {e}");
            match e {
                Error::InvalidArgument(_) => EXIT_USAGE,
                _ => EXIT_MISMATCH,
            }
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let text = match cmd {
        Command::Eval { m, a, n, format } => {
            let value = power_sum(m, a, n)?;
            render_value(&PowerSumQuery::new(m, a, n), &value, format)
        }
        Command::Poly { m, a, psi, format } => {
            let p = if psi {
                psi_a_poly(m, a)?
            } else {
                power_sum_poly(m, a)?
            };
            render_polynomial(&p, format)
        }
        Command::Coeffs {
            m_max,
            which,
            format,
        } => match which {
            Which::A => render_matrix("A", &a_matrix(m_max)?, format),
            Which::C => render_matrix("C", &c_matrix(m_max)?, format),
        },
        Command::Bernoulli { i_max, format } => render_bernoulli(&bernoulli_table(i_max)?, format),
        Command::Verify {
            m_max,
            a_max,
            n_max,
            inject,
        } => {
            let report = match inject {
                None => verify(m_max, a_max, n_max)?,
                Some(spec) => {
                    let (mu, kappa, value) = parse_injection(&spec)?;
                    let dim = (m_max.max(2) as usize).max(mu).max(kappa);
                    let c = c_matrix(dim)?.with_entry(mu, kappa, value)?;
                    verify_with(&c, m_max, a_max, n_max)?
                }
            };
            write_out(out, &report.to_string())?;
            let _ = writeln!(err, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
            return Ok(if report.success() {
                EXIT_SUCCESS
            } else {
                EXIT_MISMATCH
            });
        }
        Command::Bench { m, a, n, reps } => {
            let outcome = match bench(m, a, &n, reps) {
                Ok(o) => o,
                Err(Error::Inconsistent(msg)) => {
                    let _ = writeln!(err, "psisum: strategies disagree: {msg}");
                    return Ok(EXIT_MISMATCH);
                }
                Err(e) => return Err(e),
            };
            for q in &outcome.skipped {
                let _ = writeln!(
                    err,
                    "note: nested-sum row skipped for S{q}: more than {ORACLE_TERM_LIMIT} terms"
                );
            }
            let mut text = format!("{}\n", BenchRow::CSV_HEADER);
            for row in &outcome.rows {
                text.push_str(&row.to_csv());
                text.push('\n');
            }
            text
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_SUCCESS)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Inconsistent(format!("writing output: {e}")))
}

fn parse_injection(spec: &str) -> Result<(usize, usize, Rational), Error> {
    let bad = || Error::invalid(format!("--inject expects MU,KAPPA,VALUE, got {spec:?}"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [mu, kappa, value] = parts.as_slice() else {
        return Err(bad());
    };
    let mu = mu.parse().map_err(|_| bad())?;
    let kappa = kappa.parse().map_err(|_| bad())?;
    let value = value.parse::<Rational>().map_err(|_| bad())?;
    Ok((mu, kappa, value))
}
