use eulerian_congruence::congruence::{
    congruence_report, even_ell_strengthening, m2_identity_check, polynomiality_check,
    polynomiality_min_order,
};
use eulerian_congruence::eulerian::eulerian_poly;
use eulerian_congruence::Poly;

pub fn run_example() -> eulerian_congruence::Result<()> {
    let report = congruence_report(&eulerian_poly(2), 2, 2)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report.to_json()).unwrap()
    );

    let wrong = congruence_report(&Poly::from_ints(&[0, 2, 1]), 2, 2)?;
    println!("x^2 + 2x satisfies it: {}", wrong.holds);

    for l in 2..=6 {
        let strong = even_ell_strengthening(l, 3)?;
        println!("ell = {l}: one power higher holds = {}", strong.holds);
    }
    println!("m = 2 identity at ell = 5: {}", m2_identity_check(5)?.holds);

    let order = polynomiality_min_order(3, 2);
    let p = polynomiality_check(3, 2, order)?;
    println!(
        "series collapses to a polynomial of degree {:?}",
        p.polynomial.degree()
    );
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
