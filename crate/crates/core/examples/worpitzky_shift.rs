use eulerian_congruence::poly::binom_poly;
use eulerian_congruence::shift::{worpitzky_check, ShiftOperator};
use eulerian_congruence::Poly;

pub fn run_example() -> eulerian_congruence::Result<()> {
    let f = Poly::from_ints(&[0, 0, 1]);
    let shifted = ShiftOperator::shift(1).apply(&f);
    println!("S t^2 = {}", shifted.display_descending("t"));
    println!("C(t+3, 3) = {}", binom_poly(3, 3).display_descending("t"));
    for l in 0..=8 {
        let id = worpitzky_check(l);
        println!(
            "ell = {l}: {} -> {}",
            id.lhs.display_descending("t"),
            id.holds
        );
    }
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
