use clap::Parser;

use eulerian_congruence::cli::{run, Cli, EXIT_USAGE};

fn main() {
    let result = run(&Cli::parse());
    if result.exit_code == EXIT_USAGE {
        eprint!("{}", result.payload);
    } else {
        print!("{}", result.payload);
    }
    std::process::exit(result.exit_code);
}
