use eulerian_congruence::congruence::{
    equivalence_audit, falsification_sweep, solve_characterization,
};

pub fn run_example() -> eulerian_congruence::Result<()> {
    let s = solve_characterization(6, 3)?;
    println!(
        "solved: {} (rank {}, unique {})",
        s.solution, s.system_rank, s.unique
    );

    let audit = equivalence_audit(7, &[2, 3, 4, 5])?;
    println!(
        "ell = 7, m in 2..=5 agree on A_7: {}",
        audit.matches_eulerian
    );

    let survivors = falsification_sweep(5, 2, 50, 1)?;
    println!("perturbations of A_5 that still pass: {}", survivors.len());
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
