use eulerian_congruence::audit::{run_audit, AuditConfig};

pub fn run_example() -> eulerian_congruence::Result<()> {
    let outcome = run_audit(&AuditConfig::new(5, 3, 42));
    print!("{}", outcome.render_plain());
    println!("all passed: {}", outcome.passed());
    Ok(())
}

fn main() -> eulerian_congruence::Result<()> {
    run_example()
}
