use eulerian_congruence::shift::{linial_both, operator_divisibility};

pub fn run_example() -> eulerian_congruence::Result<()> {
    for m in 1..=3 {
        for l in 1..=4 {
            let id = linial_both(l, m);
            let div = operator_divisibility(l, m);
            println!(
                "m = {m}, ell = {l}: {}  (formulas agree: {}, divisible: {})",
                id.lhs.display_descending("t"),
                id.holds,
                div.remainder.is_zero()
            );
        }
    }
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
