// Closed-form polynomials for power sums and for the psi series.
//
//     cargo run --example closed_form_polynomials

use psisum::cli::{latex_polynomial, PolyJson};
use psisum::{power_sum_poly, psi_a_poly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (m, a) in [(2, 1), (3, 1), (4, 1), (5, 1), (8, 2)] {
        let p = power_sum_poly(m, a)?;
        println!("S_{m}^({a})(n) = {p}");
    }

    let psi = psi_a_poly(4, 0)?;
    println!("psi_4(n) = {psi}   (psi_4(2) = {})", psi.eval_int(2));
    println!("psi_3^(2)(n) = {}", latex_polynomial(&psi_a_poly(3, 2)?));

    let json = serde_json::to_string(&PolyJson::from_polynomial(&power_sum_poly(3, 1)?))?;
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
