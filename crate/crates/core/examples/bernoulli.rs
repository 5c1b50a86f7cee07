use eulerian_congruence::bernoulli::{
    bernoulli_number_from_eulerian, bernoulli_polys, power_sum_via_bernoulli, zeta_negative,
};

pub fn run_example() -> eulerian_congruence::Result<()> {
    for b in bernoulli_polys(6) {
        println!("B_{}(x) = {}", b.ell, b.poly.display_descending("x"));
    }
    for l in 1..=8 {
        println!(
            "B_{l}(0) from A_{}(-1): {}",
            l - 1,
            bernoulli_number_from_eulerian(l)?
        );
    }
    println!("0^3 + 1^3 + ... + 9^3 = {}", power_sum_via_bernoulli(3, 10));
    println!(
        "zeta(-1) = {}, zeta(-3) = {}",
        zeta_negative(1)?,
        zeta_negative(3)?
    );
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
