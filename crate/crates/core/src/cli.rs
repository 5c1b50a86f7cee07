//! Command-line front end. The binary only parses arguments and prints the
//! [`CommandResult`]; everything else lives here so it can be tested.
//!
//! Exit codes: 0 when every requested verdict is true, 1 when a verdict is
//! false, 2 for usage errors.

use clap::{Parser, Subcommand, ValueEnum};

use crate::audit::{run_audit, AuditConfig};
use crate::bernoulli::{bernoulli_polys, bernoulli_table_csv, bernoulli_table_json};
use crate::congruence::{
    coeff_strings, congruence_report, polynomiality_check, solve_characterization,
};
use crate::error::Error;
use crate::eulerian::{eulerian_poly, eulerian_table};
use crate::poly::Poly;
use crate::shift::{linial_char_poly_ps, linial_char_poly_worp, worpitzky_check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "eulerian",
    version,
    about = "Exact Eulerian polynomial toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A_ell(x) and the Eulerian triangle through row ell.
    Eulerian {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the Bernoulli polynomials B_0 .. B_ell.
    Bernoulli {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check the congruence for f (default A_ell) modulo (x-1)^(ell+1).
    Verify {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        m: usize,
        /// Coefficients lowest degree first, e.g. "0 1 1" for x + x^2.
        #[arg(long)]
        f: Option<String>,
        /// Also run the truncated polynomiality check for A_ell at this order.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Recover the monic polynomial satisfying the congruence.
    Solve {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Characteristic polynomial of the extended Linial arrangement.
    Linial {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        m: usize,
        /// Print both closed forms and whether they agree.
        #[arg(long)]
        both: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check t^ell = A_ell(S) C(t+ell, ell).
    Worpitzky {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run every invariant battery up to the given bounds.
    Audit {
        /// Largest ell.
        #[arg(long, default_value_t = 6)]
        ell: usize,
        /// Largest m.
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandResult {
    fn verdict(ok: bool, payload: String) -> Self {
        CommandResult {
            exit_code: if ok { EXIT_OK } else { EXIT_FAILED },
            payload,
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code: EXIT_USAGE,
            payload: format!("error: {err}\n"),
        }
    }
}

fn json(v: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> CommandResult {
    match &cli.command {
        Command::Eulerian { ell, format } => cmd_eulerian(*ell, *format),
        Command::Bernoulli { ell, format } => cmd_bernoulli(*ell, *format),
        Command::Verify {
            ell,
            m,
            f,
            order,
            format,
        } => cmd_verify(*ell, *m, f.as_deref(), *order, *format),
        Command::Solve { ell, m, format } => cmd_solve(*ell, *m, *format),
        Command::Linial {
            ell,
            m,
            both,
            format,
        } => cmd_linial(*ell, *m, *both, *format),
        Command::Worpitzky { ell, format } => cmd_worpitzky(*ell, *format),
        Command::Audit {
            ell,
            m,
            seed,
            format,
        } => cmd_audit(&AuditConfig::new(*ell, *m, *seed), *format),
    }
}

pub fn cmd_eulerian(ell: usize, format: Format) -> CommandResult {
    let poly = eulerian_poly(ell);
    let table = eulerian_table(ell);
    let payload = match format {
        Format::Plain => {
            let mut out = poly.display_ascending("x");
            out.push('\n');
            for row in table.rows() {
                let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
            out
        }
        Format::Csv => table.to_csv(),
        Format::Json => json(serde_json::json!({
            "ell": ell,
            "polynomial": coeff_strings(&poly),
            "display": poly.display_ascending("x"),
            "table": table.to_json(),
        })),
    };
    CommandResult::verdict(true, payload)
}

pub fn cmd_bernoulli(ell: usize, format: Format) -> CommandResult {
    let payload = match format {
        Format::Plain => bernoulli_polys(ell)
            .iter()
            .map(|b| format!("B_{}(x) = {}\n", b.ell, b.poly.display_descending("x")))
            .collect(),
        Format::Csv => bernoulli_table_csv(ell),
        Format::Json => {
            let numbers: Vec<String> = bernoulli_polys(ell)
                .iter()
                .map(|b| crate::rational::format(&b.number()))
                .collect();
            json(serde_json::json!({
                "ell": ell,
                "table": bernoulli_table_json(ell),
                "numbers": numbers,
            }))
        }
    };
    CommandResult::verdict(true, payload)
}

pub fn cmd_verify(
    ell: usize,
    m: usize,
    f: Option<&str>,
    order: Option<usize>,
    format: Format,
) -> CommandResult {
    let f = match f {
        Some(text) => match Poly::parse_canonical(text) {
            Ok(p) => p,
            Err(e) => return CommandResult::usage(e),
        },
        None => eulerian_poly(ell),
    };
    let report = match congruence_report(&f, ell, m) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e),
    };
    let poly_check = match order.map(|n| polynomiality_check(ell, m, n)).transpose() {
        Ok(p) => p,
        Err(e) => return CommandResult::usage(e),
    };
    let ok = report.holds && poly_check.as_ref().is_none_or(|p| p.holds);
    let payload = match format {
        Format::Json => {
            let mut v = report.to_json();
            if let Some(p) = &poly_check {
                v["polynomiality"] = serde_json::json!({
                    "order": p.order,
                    "degree_bound": p.degree_bound,
                    "holds": p.holds,
                    "polynomial": coeff_strings(&p.polynomial),
                    "matches_quotient": p.matches_quotient,
                });
            }
            json(v)
        }
        Format::Plain => {
            let mut out = format!(
                "f = {}\nholds = {}\ndefect = {}\nremainder = {}\nquotient = {}\n",
                report.f.display_ascending("x"),
                report.holds,
                report.defect.display_ascending("x"),
                report.remainder.display_ascending("x"),
                report.quotient.display_ascending("x"),
            );
            if let Some(p) = &poly_check {
                out.push_str(&format!("polynomiality(order {}) = {}\n", p.order, p.holds));
            }
            out
        }
        Format::Csv => {
            let width = report.defect.coeffs().len().max(1);
            let mut out = String::from("degree,defect,remainder,quotient\n");
            for k in 0..width {
                out.push_str(&format!(
                    "{k},{},{},{}\n",
                    report.defect.coeff(k),
                    report.remainder.coeff(k),
                    report.quotient.coeff(k)
                ));
            }
            out
        }
    };
    CommandResult::verdict(ok, payload)
}

pub fn cmd_solve(ell: usize, m: usize, format: Format) -> CommandResult {
    let sol = match solve_characterization(ell, m) {
        Ok(s) => s,
        Err(e @ Error::InvalidArgument(_)) => return CommandResult::usage(e),
        Err(e) => return CommandResult::verdict(false, format!("error: {e}\n")),
    };
    let matches = sol.solution == eulerian_poly(ell);
    let ok = matches && sol.unique;
    let payload = match format {
        Format::Plain => format!(
            "{}\nrank = {}, unique = {}, matches recurrence = {}\n",
            sol.solution.display_ascending("x"),
            sol.system_rank,
            sol.unique,
            matches
        ),
        Format::Csv => format!("{}\n", coeff_strings(&sol.solution).join(",")),
        Format::Json => json(serde_json::json!({
            "ell": ell,
            "m": m,
            "solution": coeff_strings(&sol.solution),
            "display": sol.solution.display_ascending("x"),
            "rank": sol.system_rank,
            "unique": sol.unique,
            "matches_recurrence": matches,
        })),
    };
    CommandResult::verdict(ok, payload)
}

pub fn cmd_linial(ell: usize, m: usize, both: bool, format: Format) -> CommandResult {
    if ell < 1 || m < 1 {
        return CommandResult::usage("linial needs ell >= 1 and m >= 1");
    }
    let averaging = linial_char_poly_ps(ell, m);
    let eulerian = both.then(|| linial_char_poly_worp(ell, m));
    let agree = eulerian.as_ref().is_none_or(|p| *p == averaging);
    let payload = match format {
        Format::Plain => {
            let mut out = format!("{}\n", averaging.display_descending("t"));
            if let Some(p) = &eulerian {
                out.push_str(&format!(
                    "averaging: {}\n",
                    averaging.display_descending("t")
                ));
                out.push_str(&format!("eulerian:  {}\n", p.display_descending("t")));
                out.push_str(&format!("agree={agree}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = format!("averaging,{}\n", coeff_strings(&averaging).join(","));
            if let Some(p) = &eulerian {
                out.push_str(&format!("eulerian,{}\n", coeff_strings(p).join(",")));
            }
            out
        }
        Format::Json => {
            let mut v = serde_json::json!({
                "ell": ell,
                "m": m,
                "averaging": coeff_strings(&averaging),
                "display": averaging.display_descending("t"),
            });
            if let Some(p) = &eulerian {
                v["eulerian"] = coeff_strings(p).into();
                v["agree"] = agree.into();
            }
            json(v)
        }
    };
    CommandResult::verdict(agree, payload)
}

pub fn cmd_worpitzky(ell: usize, format: Format) -> CommandResult {
    if ell < 1 {
        return CommandResult::usage("worpitzky needs ell >= 1");
    }
    let check = worpitzky_check(ell);
    let payload = match format {
        Format::Plain => format!(
            "A_{ell}(S) C(t+{ell}, {ell}) = {}\nholds = {}\n",
            check.lhs.display_descending("t"),
            check.holds
        ),
        Format::Csv => format!("{},{}\n", coeff_strings(&check.lhs).join(","), check.holds),
        Format::Json => json(serde_json::json!({
            "ell": ell,
            "lhs": coeff_strings(&check.lhs),
            "rhs": coeff_strings(&check.rhs),
            "holds": check.holds,
        })),
    };
    CommandResult::verdict(check.holds, payload)
}

pub fn cmd_audit(cfg: &AuditConfig, format: Format) -> CommandResult {
    if cfg.max_ell < 1 || cfg.max_m < 1 {
        return CommandResult::usage("audit bounds must be >= 1");
    }
    let out = run_audit(cfg);
    let payload = match format {
        Format::Plain => out.render_plain(),
        Format::Json => json(out.to_json()),
        Format::Csv => out.to_csv(),
    };
    CommandResult::verdict(out.passed(), payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        let cli =
            Cli::try_parse_from(std::iter::once("eulerian").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn eulerian_outputs() {
        let r = run_args(&["eulerian", "--ell", "4"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.payload.lines().next(), Some("x + 11x^2 + 11x^3 + x^4"));
        assert_eq!(run_args(&["eulerian", "--ell", "0"]).payload, "1\n");
        let csv = run_args(&["eulerian", "--ell", "3", "--format", "csv"]).payload;
        assert!(csv.lines().any(|l| l == "1,4,1"));
    }

    #[test]
    fn verify_outputs() {
        let r = run_args(&["verify", "--ell", "2", "--m", "2"]);
        assert_eq!(r.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["holds"], true);
        assert_eq!(
            v["defect"],
            serde_json::json!(["0", "-1/8", "1/2", "-3/4", "1/2", "-1/8"])
        );

        let r = run_args(&["verify", "--ell", "2", "--m", "2", "--f", "0 2 1"]);
        assert_eq!(r.exit_code, 1);
        let v: serde_json::Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["holds"], false);

        assert_eq!(run_args(&["verify", "--ell", "1", "--m", "3"]).exit_code, 0);
        assert_eq!(
            run_args(&["verify", "--ell", "2", "--m", "2", "--f", "0 x"]).exit_code,
            2
        );
        assert_eq!(run_args(&["verify", "--ell", "2", "--m", "1"]).exit_code, 2);
        assert_eq!(
            run_args(&["verify", "--ell", "2", "--m", "3", "--order", "5"]).exit_code,
            2
        );

        let r = run_args(&["verify", "--ell", "2", "--m", "3", "--order", "60"]);
        assert_eq!(r.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["polynomiality"]["holds"], true);
    }

    #[test]
    fn solve_outputs() {
        let r = run_args(&["solve", "--ell", "3", "--m", "2"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.payload.lines().next(), Some("x + 4x^2 + x^3"));
        assert_eq!(
            run_args(&["solve", "--ell", "1", "--m", "2"])
                .payload
                .lines()
                .next(),
            Some("x")
        );
        let r = run_args(&["solve", "--ell", "5", "--m", "3", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["matches_recurrence"], true);
        assert_eq!(run_args(&["solve", "--ell", "0", "--m", "2"]).exit_code, 2);
    }

    #[test]
    fn linial_outputs() {
        let r = run_args(&["linial", "--ell", "2", "--m", "1", "--both"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.payload.lines().next(), Some("t^2 - 3t + 3"));
        assert!(r.payload.contains("agree=true"));
        assert_eq!(
            run_args(&["linial", "--ell", "1", "--m", "1"]).payload,
            "t - 1\n"
        );
        let r = run_args(&[
            "linial", "--ell", "4", "--m", "2", "--both", "--format", "json",
        ]);
        assert_eq!(r.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&r.payload).unwrap();
        assert_eq!(v["agree"], true);
    }

    #[test]
    fn worpitzky_and_bernoulli() {
        let r = run_args(&["worpitzky", "--ell", "6"]);
        assert_eq!(r.exit_code, 0);
        assert!(r.payload.contains("= t^6"));
        let r = run_args(&["bernoulli", "--ell", "4"]);
        assert!(r.payload.contains("B_4(x) = x^4 - 2x^3 + x^2 - 1/30"));
    }

    #[test]
    fn audit_exit_codes() {
        assert_eq!(
            run_args(&["audit", "--ell", "1", "--m", "2", "--seed", "0"]).exit_code,
            0
        );
        let mut cfg = AuditConfig::new(3, 2, 42);
        cfg.corrupt_table = true;
        let r = cmd_audit(&cfg, Format::Plain);
        assert_eq!(r.exit_code, 1);
        assert!(r.payload.contains("FAIL"));
    }

    #[test]
    fn parse_errors_are_usage_errors() {
        let err =
            Cli::try_parse_from(["eulerian", "verify", "--ell", "-1", "--m", "2"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
        let err = Cli::try_parse_from(["eulerian", "frobnicate"]).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_USAGE);
    }

    #[test]
    fn deterministic_payloads() {
        for args in [
            &["audit", "--ell", "3", "--m", "3", "--format", "json"][..],
            &["verify", "--ell", "5", "--m", "4"][..],
        ] {
            assert_eq!(run_args(args), run_args(args));
        }
    }
}
