// Evaluate nested power sums S_m^(a)(n) exactly and check them against the
// literal nested summation.
//
//     cargo run --example power_sums

use psisum::{brute_force_power_sum, power_sum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // (m, a, n)
    let queries = [
        (3, 1, 3),
        (2, 1, 4),
        (8, 2, 3),
        (1, 3, 2),
        (6, 4, 1),
        (5, 0, 2),
        (4, 6, 20),
    ];
    for (m, a, n) in queries {
        let value = power_sum(m, a, n)?;
        let oracle = brute_force_power_sum(m, a, n);
        assert_eq!(value, oracle);
        println!("S_{m}^({a})({n}) = {value}");
    }

    // Far beyond anything the nested loop could reach.
    let big = power_sum(10, 5, 1_000_000_000_000)?;
    println!("S_10^(5)(10^12) = {big}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
