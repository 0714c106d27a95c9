// Closed form against literal nested summation, timed.
//
//     cargo run --release --example timing

use psisum::cli::bench;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let outcome = bench(8, 2, &[10, 100, 400], 3)?;
    for row in &outcome.rows {
        println!(
            "{:<12} n = {:<4} {:>10?}  {}",
            row.strategy.name(),
            row.query.n,
            row.median,
            row.value
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
