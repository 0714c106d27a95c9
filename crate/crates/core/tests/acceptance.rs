//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails or overruns its time limit.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use psisum::{
    a_matrix, bernoulli, bernoulli_from_pair, brute_force_power_sum, c_matrix, power_sum,
    psi_a_recursive, psi_a_value, verify_inverse, Error, Rational,
};

use common::{bernoulli_oracle, choose, inverse, q};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const C8_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[1, -2, 2],
    &[0, 5, -10, 6],
    &[1, -10, 40, -54, 24],
    &[0, 21, -140, 336, -336, 120],
    &[1, -42, 462, -1764, 3024, -2400, 720],
];

fn c_matrix_golden() -> Outcome {
    let c = c_matrix(8).map_err(|e| e.to_string())?;
    let mut nonzero = 0;
    for (mu, row) in (2..=8).zip(C8_TABLE) {
        for kappa in 2..=8 {
            let expected = row.get(kappa - 2).copied().unwrap_or(0);
            ensure(*c.get(mu, kappa) == q(expected), || {
                format!("c_{{{mu},{kappa}}} = {} != {expected}", c.get(mu, kappa))
            })?;
            nonzero += usize::from(expected != 0);
        }
    }
    Ok(format!(
        "28 lower-triangular entries equal, {nonzero} nonzero"
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for m in 0..=10 {
        for a in 0..=4 {
            for n in 0..=20 {
                let fast = power_sum(m, a, n).map_err(|e| e.to_string())?;
                let slow = brute_force_power_sum(m, a, n);
                ensure(fast == slow, || {
                    format!("S({m},{a},{n}): {fast} vs oracle {slow}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} queries equal"))
}

fn paper_closed_forms() -> Outcome {
    type Form = fn(i64) -> Rational;
    let forms: [(u32, u32, &str, Form); 5] = [
        (2, 1, "S_2^(1)", common::sum_squares),
        (3, 1, "S_3^(1)", common::sum_cubes),
        (4, 1, "S_4^(1)", common::sum_fourth),
        (5, 1, "S_5^(1)", common::sum_fifth),
        (8, 2, "S_8^(2)", common::second_order_eighth),
    ];
    for (m, a, name, form) in forms {
        for n in 1..=30i64 {
            let got = q(power_sum(m, a, n as u64).map_err(|e| e.to_string())?);
            let want = form(n);
            ensure(got == want, || format!("{name}({n}): {got} vs {want}"))?;
        }
    }
    Ok("5 forms x 30 points".into())
}

fn psi_closed_vs_recursion() -> Outcome {
    let mut count = 0;
    for m in 1..=10 {
        for a in 0..=5 {
            for n in 1..=30 {
                let closed = psi_a_value(m, a, n).map_err(|e| e.to_string())?;
                let summed = psi_a_recursive(m, a, n).map_err(|e| e.to_string())?;
                ensure(closed == summed, || {
                    format!("psi_{m}^({a})({n}): {closed} vs {summed}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} values equal"))
}

fn inverse_identity() -> Outcome {
    let (a, c) = (a_matrix(12).unwrap(), c_matrix(12).unwrap());
    ensure(verify_inverse(&a, &c).unwrap(), || {
        "A*C or C*A is not I".into()
    })?;
    let dense: Vec<Vec<Rational>> = (2..=12)
        .map(|mu| (2..=12).map(|k| a.get(mu, k).clone()).collect())
        .collect();
    let inv = inverse(dense).ok_or("A_12 singular under elimination")?;
    for mu in 2..=12 {
        for k in 2..=12 {
            ensure(inv[mu - 2][k - 2] == *c.get(mu, k), || {
                format!(
                    "elimination gives {} at ({mu},{k}), recursion {}",
                    inv[mu - 2][k - 2],
                    c.get(mu, k)
                )
            })?;
        }
    }
    Ok("m_max = 12, both products identity, elimination agrees".into())
}

fn bernoulli_suite() -> Outcome {
    let mut values = Vec::new();
    for i in 0..=10u32 {
        let got = bernoulli(i).map_err(|e| e.to_string())?;
        let want = bernoulli_oracle(i);
        ensure(got == want, || {
            format!("B_{i}: {got} vs linear-solve {want}")
        })?;
        for m in i.max(2)..=i + 4 {
            let via = bernoulli_from_pair(m, m - i + 1).map_err(|e| e.to_string())?;
            ensure(via == got, || {
                format!("B_{i} from (m={m}, j={}) = {via}", m - i + 1)
            })?;
        }
        values.push(got);
    }
    for m in 0..=10u64 {
        for n in 1..=20u64 {
            let mut total = Rational::zero();
            for (k, b) in values.iter().enumerate().take(m as usize + 1) {
                total += q(choose(m + 1, k as u64))
                    * b
                    * q(BigInt::from(n).pow((m + 1) as u32 - k as u32));
            }
            total /= q(m + 1);
            let want = q(power_sum(m as u32, 1, n).map_err(|e| e.to_string())?);
            ensure(total == want, || {
                format!("Bernoulli formula m={m} n={n}: {total} vs {want}")
            })?;
        }
    }
    ensure(values[1] == Rational::new(1.into(), 2.into()), || {
        "B_1 != +1/2".into()
    })?;
    Ok("B_0..B_10 match oracle, pair-invariant, formula reproduces sums".into())
}

fn integrality() -> Outcome {
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut note = |r: Result<BigInt, Error>| {
        checked += 1;
        if let Err(e) = r {
            violations.push(e.to_string());
        }
    };
    for m in 1..=10 {
        for a in 0..=5 {
            for n in 1..=30 {
                note(psi_a_value(m, a, n));
            }
        }
    }
    for m in 0..=10 {
        for a in 0..=4 {
            for n in 0..=20 {
                note(power_sum(m, a, n));
            }
        }
    }
    for (m, a) in [(2, 1), (3, 1), (4, 1), (5, 1), (8, 2)] {
        for n in 1..=30 {
            note(power_sum(m, a, n));
        }
    }
    ensure(violations.is_empty(), || {
        format!("{} violations: {:?}", violations.len(), violations.first())
    })?;
    Ok(format!("{checked} results integral"))
}

fn coefficient_observations() -> Outcome {
    let c = c_matrix(12).map_err(|e| e.to_string())?;
    for m in 2..=12usize {
        let nonzero: Vec<&Rational> = c.row(m).iter().filter(|v| !v.is_zero()).collect();
        for pair in nonzero.windows(2) {
            ensure(pair[0].is_positive() != pair[1].is_positive(), || {
                format!("row {m} does not alternate: {:?}", c.row(m))
            })?;
        }
        ensure(c.get(m, m).is_positive(), || {
            format!("c_{{{m},{m}}} not positive")
        })?;
        let expected = if m % 2 == 0 { 1 } else { 0 };
        ensure(*c.get(m, 2) == q(expected), || {
            format!("c_{{{m},2}} = {}", c.get(m, 2))
        })?;
    }
    Ok("rows 2..=12 alternate, c_m2 = [m even]".into())
}

fn cli_end_to_end() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_psisum");
    let run = |args: &[&str]| {
        let out = Command::new(exe)
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        Ok::<_, String>((
            out.status.code(),
            String::from_utf8_lossy(&out.stdout).into_owned(),
        ))
    };
    let golden: [(&[&str], &str); 5] = [
        (&["eval", "-m", "3", "-a", "1", "-n", "3"], "36\n"),
        (&["eval", "-m", "8", "-a", "2", "-n", "3"], "7076\n"),
        (&["eval", "-m", "5", "-a", "0", "-n", "0"], "0\n"),
        (&["coeffs", "-M", "2", "--which", "A"], "1\n"),
        (&["coeffs", "-M", "4", "--which", "C"], "1\n0 1\n1 -2 2\n"),
    ];
    for (args, want) in golden {
        let (code, out) = run(args)?;
        ensure(code == Some(0) && out == want, || {
            format!("{args:?}: exit {code:?}, stdout {out:?}")
        })?;
    }
    let (code, out) = run(&["coeffs", "-M", "8", "--which", "C"])?;
    ensure(
        code == Some(0) && out.lines().last() == Some("1 -42 462 -1764 3024 -2400 720"),
        || format!("coeffs -M 8: {out:?}"),
    )?;
    let (code, out) = run(&[
        "verify", "-M", "8", "-A", "3", "-N", "12", "--inject", "4,3,-1",
    ])?;
    ensure(code == Some(1), || {
        format!("fault injection exited {code:?}")
    })?;
    ensure(out.contains("mismatch at (4,1,"), || {
        format!("no (4,1,n) mismatch in {out:?}")
    })?;
    Ok("golden stdout byte-exact, injected fault exits 1".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "C-matrix golden table", 1, c_matrix_golden),
        (
            2,
            "oracle equivalence 0<=m<=10, 0<=a<=4, 0<=n<=20",
            60,
            oracle_equivalence,
        ),
        (
            3,
            "closed forms S2, S3, S4, S5, S8^(2), 1<=n<=30",
            5,
            paper_closed_forms,
        ),
        (
            4,
            "psi closed form == recursion",
            10,
            psi_closed_vs_recursion,
        ),
        (
            5,
            "inverse identity m_max=12 + elimination",
            1,
            inverse_identity,
        ),
        (6, "Bernoulli suite", 10, bernoulli_suite),
        (7, "integrality assertions", 60, integrality),
        (
            8,
            "coefficient sign and parity observations m<=12",
            1,
            coefficient_observations,
        ),
        (9, "CLI end-to-end", 60, cli_end_to_end),
    ];
    let mut failed = 0;
    for (id, name, limit_s, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit_s);
        let verdict = match outcome {
            Ok(detail) if elapsed < limit => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  {detail}, but took longer than {limit_s}s"),
            Err(why) => format!("FAIL  {why}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {id} [{name}] ({:.3}s): {verdict}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
