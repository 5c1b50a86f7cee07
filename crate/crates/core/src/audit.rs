//! Bounded battery of every identity and invariant in the crate.

use num_bigint::BigInt;

use crate::bernoulli::{
    bernoulli_number_from_eulerian, bernoulli_poly, power_sum_eulerian_form, second_form_check,
    zeta_negative_routes,
};
use crate::congruence::{
    congruence_report, equivalence_audit, even_ell_strengthening, falsification_sweep,
    m2_identity_check, polynomiality_check, polynomiality_min_order, solve_characterization,
};
use crate::eulerian::{
    alpha_polynomial, egf_eulerian_check, egf_minus_one_check, eulerian_number_direct,
    eulerian_poly, eulerian_table, frobenius_series,
};
use crate::poly::Poly;
use crate::rational::{self, factorial, from_bigint, int, Rational};
use crate::shift::{linial_both, operator_divisibility, worpitzky_check};

/// Perturbed polynomials tried per `(ell, m)` in the falsification check.
pub const PERTURBATIONS_PER_CASE: usize = 50;

#[derive(Clone, Debug)]
pub struct AuditConfig {
    pub max_ell: usize,
    pub max_m: usize,
    pub seed: u64,
    /// Test hook: bump one Eulerian number before the table checks run.
    pub corrupt_table: bool,
}

impl AuditConfig {
    pub fn new(max_ell: usize, max_m: usize, seed: u64) -> Self {
        AuditConfig {
            max_ell,
            max_m,
            seed,
            corrupt_table: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditOutcome {
    pub checks: Vec<CheckOutcome>,
}

impl AuditOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn render_plain(&self) -> String {
        let mut out = format!("{:<24} {:>6}  status\n", "check", "cases");
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<24} {:>6}  {}\n", c.name, c.cases, status));
        }
        for c in self.checks.iter().filter(|c| !c.passed()) {
            for f in &c.failures {
                out.push_str(&format!("FAIL {}: {}\n", c.name, f));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "cases": c.cases,
                "passed": c.passed(),
                "failures": c.failures,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,cases,passed\n");
        for c in &self.checks {
            out.push_str(&format!("{},{},{}\n", c.name, c.cases, c.passed()));
        }
        out
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn expect_result<T>(
        &mut self,
        r: crate::Result<T>,
        ok: impl FnOnce(&T) -> bool,
        describe: impl FnOnce() -> String,
    ) {
        match r {
            Ok(v) => {
                let passed = ok(&v);
                self.expect(passed, describe);
            }
            Err(e) => self.expect(false, || format!("{}: {e}", describe())),
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

pub fn run_audit(cfg: &AuditConfig) -> AuditOutcome {
    let max_ell = cfg.max_ell.max(1);
    let congruence_ms: Vec<usize> = (2..=cfg.max_m.max(2)).collect();
    let linial_ms: Vec<usize> = (1..=cfg.max_m.max(1)).collect();
    let mut checks = Vec::new();

    let mut table = eulerian_table(max_ell);
    if cfg.corrupt_table {
        let row = &mut table.rows_mut()[max_ell - 1];
        row[(max_ell - 1) / 2] += 1;
    }

    let mut c = Check::new("eulerian-routes");
    let one_minus_x = Poly::from_ints(&[1, -1]);
    for l in 1..=max_ell {
        for k in 1..=l as i64 {
            let (a, b) = (table.get(l, k), eulerian_number_direct(l, k));
            c.expect(a == b, || {
                format!("ell={l} k={k} recurrence={a} closed-form={b}")
            });
        }
        let from_table = Poly::from_coeffs(
            std::iter::once(Rational::from_integer(0.into()))
                .chain(table.row(l).iter().cloned().map(from_bigint))
                .collect(),
        );
        let extracted = frobenius_series(l, 3 * l)
            .mul_poly(&one_minus_x.pow(l as u32 + 1))
            .to_poly();
        c.expect(extracted == from_table, || {
            format!(
                "ell={l} series numerator {} != table {}",
                extracted.to_canonical(),
                from_table.to_canonical()
            )
        });
    }
    checks.push(c.finish());

    let mut c = Check::new("eulerian-triangle");
    for l in 1..=max_ell {
        let row = table.row(l);
        let sum: BigInt = row.iter().sum();
        c.expect(sum == factorial(l), || {
            format!("ell={l} row sum {sum} != {l}!")
        });
        let palindromic = row.iter().eq(row.iter().rev());
        c.expect(palindromic, || format!("ell={l} row is not palindromic"));
        let positive = row.iter().all(|a| *a > BigInt::from(0));
        c.expect(positive, || format!("ell={l} row has a nonpositive entry"));
    }
    checks.push(c.finish());

    let mut c = Check::new("worpitzky");
    for l in 1..=max_ell {
        c.expect(worpitzky_check(l).holds, || {
            format!("operator form fails at ell={l}")
        });
        let a = eulerian_poly(l);
        for k in 1..=20i64 {
            let rhs: BigInt = (1..=l)
                .map(|j| a.coeff(j).to_integer() * rational::binomial(k + (l - j) as i64, l as i64))
                .sum();
            c.expect(BigInt::from(k).pow(l as u32) == rhs, || {
                format!("numeric form fails at ell={l} k={k}")
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("generating-functions");
    c.expect_result(
        egf_eulerian_check(max_ell),
        |r| r.agree,
        || format!("A_l(x) egf through t^{max_ell}"),
    );
    let order = max_ell.max(2);
    c.expect_result(
        egf_minus_one_check(order),
        |ok| *ok,
        || format!("A_l(-1) egf through t^{order}"),
    );
    checks.push(c.finish());

    let mut c = Check::new("alpha-polynomial");
    for l in 1..=max_ell {
        let target = Poly::monomial(int(1), l);
        c.expect_result(
            alpha_polynomial(&eulerian_poly(l), l),
            |a| *a == target,
            || format!("alpha(A_{l}) != t^{l}"),
        );
    }
    checks.push(c.finish());

    let mut c = Check::new("bernoulli-bridges");
    for l in 1..=max_ell {
        let b = bernoulli_poly(l);
        c.expect_result(
            bernoulli_number_from_eulerian(l),
            |v| *v == b.number(),
            || format!("B_{l}(0) via A_{}(-1)", l - 1),
        );
        c.expect(second_form_check(l).holds, || {
            format!("second form fails at ell={l}")
        });
        let (z1, z2) = zeta_negative_routes(l);
        c.expect(z1 == z2, || format!("zeta(-{l}) routes {z1} vs {z2}"));
        let next = bernoulli_poly(l + 1).poly;
        for n in 1..=12i64 {
            let lhs = next.eval(&int(n)) - next.coeff(0);
            let rhs = from_bigint(power_sum_eulerian_form(l, n)) * int(l as i64 + 1);
            c.expect(lhs == rhs, || {
                format!("power-sum form fails at ell={l} N={n}")
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("linial-formulas");
    for l in 1..=max_ell {
        for &m in &linial_ms {
            let both = linial_both(l, m);
            let shape = both.lhs.is_monic()
                && both.lhs.degree() == Some(l)
                && both.lhs.has_integer_coeffs();
            c.expect(both.holds && shape, || {
                format!(
                    "ell={l} m={m}: {} vs {}",
                    both.lhs.display_descending("t"),
                    both.rhs.display_descending("t")
                )
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("operator-divisibility");
    for l in 1..=max_ell {
        for &m in &linial_ms {
            let d = operator_divisibility(l, m);
            c.expect(d.remainder.is_zero(), || {
                format!(
                    "ell={l} m={m} remainder {}",
                    d.remainder.symbol().to_canonical()
                )
            });
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("congruence");
    for l in 1..=max_ell {
        for &m in &congruence_ms {
            c.expect_result(
                congruence_report(&eulerian_poly(l), l, m),
                |r| r.holds && r.quotient.degree() == Some(m * l + m - l - 2),
                || format!("ell={l} m={m}"),
            );
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("even-strengthening");
    for l in 1..=max_ell {
        for &m in &congruence_ms {
            let expect_hold = l % 2 == 0;
            c.expect_result(
                even_ell_strengthening(l, m),
                |r| r.holds == expect_hold,
                || format!("ell={l} m={m} expected holds={expect_hold}"),
            );
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("m2-identity");
    for l in 1..=max_ell {
        c.expect_result(
            m2_identity_check(l),
            |r| r.holds && r.series_holds,
            || format!("ell={l}"),
        );
    }
    checks.push(c.finish());

    let mut c = Check::new("polynomiality");
    for l in 1..=max_ell {
        for &m in &congruence_ms {
            let order = polynomiality_min_order(l, m);
            c.expect_result(
                polynomiality_check(l, m, order),
                |p| p.holds && p.matches_quotient,
                || format!("ell={l} m={m} order={order}"),
            );
        }
    }
    checks.push(c.finish());

    let mut c = Check::new("characterization");
    for l in 1..=max_ell {
        for &m in &congruence_ms {
            c.expect_result(
                solve_characterization(l, m),
                |s| s.unique && s.solution == eulerian_poly(l),
                || format!("ell={l} m={m}"),
            );
        }
    }
    c.expect_result(
        equivalence_audit(max_ell, &congruence_ms),
        |r| r.matches_eulerian,
        || format!("equivalence across m for ell={max_ell}"),
    );
    checks.push(c.finish());

    let mut c = Check::new("falsification");
    for l in 1..=max_ell {
        for &m in congruence_ms.iter().filter(|&&m| m <= 3) {
            match falsification_sweep(l, m, PERTURBATIONS_PER_CASE, cfg.seed) {
                Ok(survivors) => {
                    c.cases += PERTURBATIONS_PER_CASE;
                    for f in survivors {
                        c.failures.push(format!(
                            "ell={l} m={m} non-Eulerian {} passes",
                            f.to_canonical()
                        ));
                    }
                }
                Err(e) => c.expect(false, || format!("ell={l} m={m}: {e}")),
            }
        }
    }
    checks.push(c.finish());

    AuditOutcome { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let out = run_audit(&AuditConfig::new(1, 2, 0));
        assert!(out.passed(), "{}", out.render_plain());
    }

    #[test]
    fn default_bounds_pass() {
        let out = run_audit(&AuditConfig::new(6, 4, 42));
        assert!(out.passed(), "{}", out.render_plain());
        assert!(out.checks.iter().all(|c| c.cases > 0));
    }

    #[test]
    fn corrupted_table_is_caught() {
        let mut cfg = AuditConfig::new(4, 2, 42);
        cfg.corrupt_table = true;
        let out = run_audit(&cfg);
        assert!(!out.passed());
        let failed: Vec<_> = out
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, vec!["eulerian-routes", "eulerian-triangle"]);
        assert!(out.render_plain().contains("FAIL eulerian-routes"));
    }

    #[test]
    fn output_is_deterministic() {
        let a = run_audit(&AuditConfig::new(3, 3, 9));
        let b = run_audit(&AuditConfig::new(3, 3, 9));
        assert_eq!(a.render_plain(), b.render_plain());
        assert_eq!(a.to_json(), b.to_json());
    }
}
