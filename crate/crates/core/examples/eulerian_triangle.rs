use eulerian_congruence::eulerian::{alpha_polynomial, eulerian_poly, eulerian_table};

pub fn run_example() -> eulerian_congruence::Result<()> {
    let table = eulerian_table(7);
    print!("{}", table.to_csv());
    for l in 1..=4 {
        println!("A_{l}(x) = {}", eulerian_poly(l));
    }
    // the coefficients of A_5(x) / (1-x)^6 are k^5
    let alpha = alpha_polynomial(&eulerian_poly(5), 5)?;
    println!("alpha for A_5: {}", alpha.display_descending("t"));
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
