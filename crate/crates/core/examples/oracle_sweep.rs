// Sweep a grid of queries against the nested-sum oracle, then show that a
// single corrupted coefficient is caught.
//
//     cargo run --example oracle_sweep

use psisum::cli::{verify, verify_with};
use psisum::{c_matrix, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = verify(8, 3, 12)?;
    print!("{report}");
    assert!(report.success());

    let corrupted = c_matrix(8)?.with_entry(4, 3, Rational::from_integer((-1).into()))?;
    let report = verify_with(&corrupted, 8, 3, 12)?;
    println!("with c_43 := -1: {} mismatches", report.mismatches.len());
    for m in report.mismatches.iter().take(3) {
        println!("  {} expected {} got {}", m.check, m.expected, m.got);
    }
    assert!(!report.success());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
