// Bernoulli numbers read off the psi-basis coefficients (convention B_1 = +1/2).
//
//     cargo run --example bernoulli_numbers

use psisum::powersum::bernoulli_pairs;
use psisum::{bernoulli, bernoulli_from_pair};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for i in 0..=16 {
        println!("B_{i} = {}", bernoulli(i)?);
    }

    // Every admissible (m, j) gives the same value.
    let i = 6;
    for (m, j) in bernoulli_pairs(i, i + 4) {
        println!(
            "B_{i} via (m = {m}, j = {j}): {}",
            bernoulli_from_pair(m, j)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
