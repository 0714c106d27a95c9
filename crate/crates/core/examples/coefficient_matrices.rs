// The basis-change matrices: A holds psi_mu in monomials, C holds n^mu in the
// psi basis. They are lower triangular and mutually inverse.
//
//     cargo run --example coefficient_matrices

use num_bigint::BigInt;
use psisum::{a_matrix, c_matrix, f_poly, psi_value, verify_inverse};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("f_5(n) = {}", f_poly(5)?);

    let a = a_matrix(6)?;
    println!("A_6:\n{a}");
    let c = c_matrix(8)?;
    println!("C_8:\n{c}");
    println!("A_8 C_8 = I: {}", verify_inverse(&a_matrix(8)?, &c)?);

    // n^7 rebuilt from psi_2..psi_7
    let n = 5u64;
    let rebuilt: BigInt = (2..=7)
        .map(|k| c.get(7, k).to_integer() * psi_value(k as u32, n).unwrap())
        .sum();
    println!("sum_k c_7k psi_k({n}) = {rebuilt} = {n}^7");
    assert_eq!(rebuilt, BigInt::from(n).pow(7));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
