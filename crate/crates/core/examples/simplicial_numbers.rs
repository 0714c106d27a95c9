// Exponents 0 and 1 reduce to simplicial polytopic numbers: triangular,
// tetrahedral, pentatope, ...
//
//     cargo run --example simplicial_numbers

use psisum::{power_sum, simplicial_number};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for a in 1..=4 {
        let row = (1..=8)
            .map(|n| simplicial_number(a, n).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        println!("sigma_{a}: {}", row.join(", "));
    }

    // S_1^(a)(n) = sigma_{a+1}(n) and S_0^(a)(n) = sigma_a(n)
    for a in 1..=3 {
        assert_eq!(power_sum(1, a, 6)?, simplicial_number(a + 1, 6)?);
        assert_eq!(power_sum(0, a, 6)?, simplicial_number(a, 6)?);
    }
    println!("S_1^(2)(6) = {}", power_sum(1, 2, 6)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
