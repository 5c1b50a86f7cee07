use eulerian_congruence::eulerian::{egf_eulerian_check, eulerian_at_minus_one_via_egf};
use eulerian_congruence::series::expand_quotient;
use eulerian_congruence::Poly;

pub fn run_example() -> eulerian_congruence::Result<()> {
    // (x + x^2) / (1-x)^3 = sum k^2 x^k
    let s = expand_quotient(&Poly::from_ints(&[0, 1, 1]), 3, 8)?;
    let shown: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    println!("{}", shown.join(" "));

    let egf = egf_eulerian_check(5)?;
    for (n, c) in egf.rhs.coeffs().iter().enumerate() {
        println!("[t^{n}] {c}");
    }
    println!("sides agree: {}", egf.agree);

    let values: Vec<String> = eulerian_at_minus_one_via_egf(10)?
        .iter()
        .map(ToString::to_string)
        .collect();
    println!("A_l(-1): {}", values.join(", "));
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
