//! Output formats for the command line.

use clap::ValueEnum;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffs::CoeffMatrix;
use crate::error::{Error, Result};
use crate::exactmath::{BigInt, Polynomial, Rational};
use crate::powersum::PowerSumQuery;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Latex,
    Json,
    Csv,
}

/// `[numerator, denominator]` as decimal strings.
pub type RationalPair = [String; 2];

fn pair(r: &Rational) -> RationalPair {
    [r.numer().to_string(), r.denom().to_string()]
}

fn parse_pair(p: &RationalPair) -> Result<Rational> {
    let parse = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|e| Error::invalid(format!("bad integer {s:?}: {e}")))
    };
    let (num, den) = (parse(&p[0])?, parse(&p[1])?);
    if den.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// JSON form of a polynomial: `{"variable":"n","coefficients":[[num,den],...]}`,
/// ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variable: String,
    pub coefficients: Vec<RationalPair>,
}

impl PolyJson {
    pub fn from_polynomial(p: &Polynomial) -> Self {
        PolyJson {
            variable: "n".to_string(),
            coefficients: p.coeffs().iter().map(pair).collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let coeffs = self
            .coefficients
            .iter()
            .map(parse_pair)
            .collect::<Result<_>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

fn latex_rational(r: &Rational) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let mag = r.abs();
    if mag.is_integer() {
        format!("{sign}{}", mag.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
    }
}

pub fn latex_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let power = match i {
            0 => String::new(),
            1 => "n".to_string(),
            _ => format!("n^{{{i}}}"),
        };
        if i == 0 {
            out.push_str(&latex_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&latex_rational(&mag));
            out.push(' ');
            out.push_str(&power);
        }
    }
    out
}

pub fn render_value(q: &PowerSumQuery, value: &BigInt, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{value}\n"),
        OutputFormat::Latex => format!("S_{{{}}}^{{({})}}({}) = {value}\n", q.m, q.a, q.n),
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "m": q.m, "a": q.a, "n": q.n, "value": value.to_string(),
            });
            format!("{doc}\n")
        }
        OutputFormat::Csv => format!("m,a,n,value\n{},{},{},{value}\n", q.m, q.a, q.n),
    }
}

pub fn render_polynomial(p: &Polynomial, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => format!("{p}\n"),
        OutputFormat::Latex => format!("{}\n", latex_polynomial(p)),
        OutputFormat::Json => {
            let doc = serde_json::to_string(&PolyJson::from_polynomial(p)).expect("serializable");
            format!("{doc}\n")
        }
        OutputFormat::Csv => {
            let mut out = String::from("power,numerator,denominator\n");
            for (i, c) in p.coeffs().iter().enumerate() {
                out.push_str(&format!("{i},{},{}\n", c.numer(), c.denom()));
            }
            out
        }
    }
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    matrix: &'a str,
    m_max: usize,
    rows: Vec<Vec<RationalPair>>,
}

pub fn render_matrix(name: &str, c: &CoeffMatrix, format: OutputFormat) -> String {
    let m_max = c.m_max();
    match format {
        OutputFormat::Plain => c.to_string(),
        OutputFormat::Csv => {
            let mut out = String::new();
            for mu in 2..=m_max {
                let mut cells: Vec<String> = c.row(mu).iter().map(ToString::to_string).collect();
                cells.resize(m_max - 1, String::new());
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let doc = MatrixJson {
                matrix: name,
                m_max,
                rows: (2..=m_max)
                    .map(|mu| c.row(mu).iter().map(pair).collect())
                    .collect(),
            };
            format!("{}\n", serde_json::to_string(&doc).expect("serializable"))
        }
        OutputFormat::Latex => {
            let rows: Vec<String> = (2..=m_max)
                .map(|mu| {
                    let mut cells: Vec<String> = c.row(mu).iter().map(latex_rational).collect();
                    cells.resize(m_max - 1, String::new());
                    cells.join(" & ")
                })
                .collect();
            format!(
                "{name}_{{{m_max}}} = \\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n",
                rows.join(" \\\\\n")
            )
        }
    }
}

pub fn render_bernoulli(values: &[Rational], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for (i, b) in values.iter().enumerate() {
                out.push_str(&format!("B_{i} = {b}\n"));
            }
        }
        OutputFormat::Latex => {
            for (i, b) in values.iter().enumerate() {
                out.push_str(&format!("B_{{{i}}} = {}\n", latex_rational(b)));
            }
        }
        OutputFormat::Csv => {
            out.push_str("i,numerator,denominator\n");
            for (i, b) in values.iter().enumerate() {
                out.push_str(&format!("{i},{},{}\n", b.numer(), b.denom()));
            }
        }
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "convention": "B_1 = +1/2",
                "values": values.iter().map(pair).collect::<Vec<_>>(),
            });
            out.push_str(&format!("{doc}\n"));
        }
    }
    out
}
