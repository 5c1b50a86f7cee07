//! Bernoulli polynomials and their relations to Eulerian polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::eulerian::{eulerian_at_minus_one, eulerian_poly};
use crate::poly::{binom_poly, Poly};
use crate::rational::{self, factorial, from_bigint, int, Rational};
use crate::series::SeriesT;
use crate::shift::ShiftOperator;
use crate::PolyIdentity;

/// `B_ell(x)`: monic of degree `ell`, `B_ell(0)` is the Bernoulli number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPoly {
    pub ell: usize,
    pub poly: Poly,
}

impl BernoulliPoly {
    pub fn number(&self) -> Rational {
        self.poly.coeff(0)
    }
}

/// `t e^{xt} / (e^t - 1)` expanded through `t^order`, computed as
/// `e^{xt} / ((e^t - 1) / t)` so the denominator has constant term 1.
fn bernoulli_egf(order: usize) -> SeriesT {
    let num = SeriesT::exp_of(&Poly::var(), order);
    let den = SeriesT::from_scalars(order, |n| Rational::one() / from_bigint(factorial(n + 1)));
    num.divide(&den)
        .expect("denominator has unit constant term")
}

pub fn bernoulli_poly(ell: usize) -> BernoulliPoly {
    let egf = bernoulli_egf(ell);
    BernoulliPoly {
        ell,
        poly: egf.coeff(ell).scale(&from_bigint(factorial(ell))),
    }
}

/// `B_0 .. B_max` from a single series expansion.
pub fn bernoulli_polys(max: usize) -> Vec<BernoulliPoly> {
    let egf = bernoulli_egf(max);
    egf.coeffs()
        .iter()
        .enumerate()
        .map(|(ell, c)| BernoulliPoly {
            ell,
            poly: c.scale(&from_bigint(factorial(ell))),
        })
        .collect()
}

/// Coefficient rows of `B_0 .. B_max` as CSV, `p/q` entries, lowest degree first.
pub fn bernoulli_table_csv(max: usize) -> String {
    let mut out = String::new();
    for b in bernoulli_polys(max) {
        let row: Vec<String> = b.poly.coeffs().iter().map(rational::format).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn bernoulli_table_json(max: usize) -> serde_json::Value {
    serde_json::Value::Array(
        bernoulli_polys(max)
            .into_iter()
            .map(|b| {
                b.poly
                    .coeffs()
                    .iter()
                    .map(|c| serde_json::Value::from(rational::format(c)))
                    .collect()
            })
            .collect(),
    )
}

/// `B_ell(0) = ell / (2^ell (1 - 2^ell)) * A_{ell-1}(-1)`.
pub fn bernoulli_number_from_eulerian(ell: usize) -> Result<Rational> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be >= 1".into()));
    }
    let pow2 = from_bigint(BigInt::from(2).pow(ell as u32));
    let factor = int(ell as i64) / (&pow2 * (Rational::one() - &pow2));
    Ok(factor * eulerian_at_minus_one(ell - 1))
}

/// `sum_{x=0}^{n-1} x^ell` as `(B_{ell+1}(n) - B_{ell+1}(0)) / (ell + 1)`.
pub fn power_sum_via_bernoulli(ell: usize, n: u64) -> Rational {
    let b = bernoulli_poly(ell + 1).poly;
    (b.eval(&from_bigint(BigInt::from(n))) - b.coeff(0)) / int(ell as i64 + 1)
}

/// `B_{ell+1}(t) - B_{ell+1}(0)` against `(ell+1) A_ell(S) C(t+ell, ell+1)`.
pub fn second_form_check(ell: usize) -> PolyIdentity {
    let b = bernoulli_poly(ell + 1).poly;
    let lhs = &b - &Poly::constant(b.coeff(0));
    let op = ShiftOperator::new(eulerian_poly(ell));
    let rhs = op
        .apply(&binom_poly(ell as i64, ell + 1))
        .scale(&int(ell as i64 + 1));
    PolyIdentity::new(lhs, rhs)
}

/// `zeta(-ell)` by the Bernoulli route `-B_{ell+1}(0) / (ell+1)` and by the
/// Eulerian route `A_ell(-1) / (2^{ell+1} (2^{ell+1} - 1))`.
pub fn zeta_negative_routes(ell: usize) -> (Rational, Rational) {
    let via_bernoulli = -bernoulli_poly(ell + 1).number() / int(ell as i64 + 1);
    let pow2 = from_bigint(BigInt::from(2).pow(ell as u32 + 1));
    let via_eulerian = eulerian_at_minus_one(ell) / (&pow2 * (&pow2 - Rational::one()));
    (via_bernoulli, via_eulerian)
}

/// `zeta(-ell)` for `ell >= 1`; fails if the two routes disagree.
pub fn zeta_negative(ell: usize) -> Result<Rational> {
    if ell == 0 {
        return Err(Error::InvalidArgument("ell must be >= 1".into()));
    }
    let (a, b) = zeta_negative_routes(ell);
    if a != b {
        return Err(Error::RouteMismatch(format!("zeta(-{ell}): {a} vs {b}")));
    }
    Ok(a)
}

/// `sum_k A(ell, k) C(ell + n - k, ell + 1)`, the integer form of the
/// power-sum identity.
pub fn power_sum_eulerian_form(ell: usize, n: i64) -> BigInt {
    let a = eulerian_poly(ell);
    (1..=ell)
        .map(|k| {
            a.coeff(k).to_integer() * rational::binomial(ell as i64 + n - k as i64, ell as i64 + 1)
        })
        .fold(BigInt::zero(), |acc, v| acc + v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    // Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0.
    fn bernoulli_numbers_oracle(max: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for n in 1..=max {
            let s: Rational = (0..n)
                .map(|k| from_bigint(rational::binomial(n as i64 + 1, k as i64)) * &b[k])
                .sum();
            b.push(-s / int(n as i64 + 1));
        }
        b
    }

    fn bernoulli_poly_oracle(ell: usize, numbers: &[Rational]) -> Poly {
        Poly::from_coeffs(
            (0..=ell)
                .map(|i| {
                    from_bigint(rational::binomial(ell as i64, (ell - i) as i64))
                        * &numbers[ell - i]
                })
                .collect(),
        )
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(bernoulli_poly(0).poly, Poly::one());
        assert_eq!(
            bernoulli_poly(1).poly,
            Poly::from_coeffs(vec![ratio(-1, 2), int(1)])
        );
        assert_eq!(
            bernoulli_poly(2).poly,
            Poly::from_coeffs(vec![ratio(1, 6), int(-1), int(1)])
        );
        assert_eq!(
            bernoulli_poly(3).poly,
            Poly::from_coeffs(vec![int(0), ratio(1, 2), ratio(-3, 2), int(1)])
        );
        assert_eq!(
            bernoulli_poly(4).poly,
            Poly::from_coeffs(vec![ratio(-1, 30), int(0), int(1), int(-2), int(1)])
        );
    }

    #[test]
    fn matches_recurrence_oracle() {
        let numbers = bernoulli_numbers_oracle(20);
        let all = bernoulli_polys(20);
        for b in &all {
            assert_eq!(b.poly, bernoulli_poly_oracle(b.ell, &numbers));
            assert_eq!(b.poly.degree(), Some(b.ell));
            assert!(b.poly.is_monic());
            if b.ell >= 2 {
                assert_eq!(b.poly.eval(&int(0)), b.poly.eval(&int(1)));
            }
        }
        assert_eq!(all[12], bernoulli_poly(12));
    }

    #[test]
    fn eulerian_bridge() {
        assert_eq!(bernoulli_number_from_eulerian(2).unwrap(), ratio(1, 6));
        assert_eq!(bernoulli_number_from_eulerian(3).unwrap(), int(0));
        assert_eq!(bernoulli_number_from_eulerian(1).unwrap(), ratio(-1, 2));
        for l in 1..=20 {
            assert_eq!(
                bernoulli_number_from_eulerian(l).unwrap(),
                bernoulli_poly(l).number()
            );
        }
        for k in 1..=10 {
            assert!(bernoulli_poly(2 * k + 1).number().is_zero());
        }
        assert!(bernoulli_number_from_eulerian(0).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum_via_bernoulli(1, 5), int(10));
        assert_eq!(power_sum_via_bernoulli(2, 4), int(14));
        assert_eq!(power_sum_via_bernoulli(3, 3), int(9));
        for l in 1..=8usize {
            for n in 1..=12i64 {
                let brute: BigInt = (0..n).map(|x| BigInt::from(x).pow(l as u32)).sum();
                assert_eq!(
                    power_sum_via_bernoulli(l, n as u64),
                    from_bigint(brute.clone())
                );
                assert_eq!(
                    from_bigint(power_sum_eulerian_form(l, n)),
                    from_bigint(brute)
                );
            }
        }
    }

    #[test]
    fn second_form() {
        let c = second_form_check(1);
        assert!(c.holds);
        assert_eq!(c.lhs, Poly::from_ints(&[0, -1, 1]));
        for l in 1..=10 {
            assert!(second_form_check(l).holds, "ell = {l}");
        }
    }

    #[test]
    fn zeta_values() {
        assert_eq!(zeta_negative(1).unwrap(), ratio(-1, 12));
        assert_eq!(zeta_negative(2).unwrap(), int(0));
        assert_eq!(zeta_negative(3).unwrap(), ratio(1, 120));
        for l in 1..=15 {
            let (a, b) = zeta_negative_routes(l);
            assert_eq!(a, b);
        }
        assert!(zeta_negative(0).is_err());
    }

    // 2t/(e^{2t}+1) = 2t/(e^{2t}-1) - 4t/(e^{4t}-1), each side divided by t.
    #[test]
    fn doubling_identity() {
        let order = 12;
        let unit = SeriesT::from_scalars(order, |n| if n == 0 { int(1) } else { int(0) });
        let scaled = |c: Rational| unit.scale(&Poly::constant(c));
        // (e^{at} - 1) / t
        let reduced = |a: i64| {
            SeriesT::from_scalars(order, |n| {
                from_bigint(BigInt::from(a).pow(n as u32 + 1)) / from_bigint(factorial(n + 1))
            })
        };
        let plus = unit.add(&SeriesT::exp_of(&Poly::constant(int(2)), order));
        let lhs = scaled(int(2)).divide(&plus).unwrap();
        let rhs = scaled(int(2))
            .divide(&reduced(2))
            .unwrap()
            .sub(&scaled(int(4)).divide(&reduced(4)).unwrap());
        // lhs is 2/(e^{2t}+1) = (1/t) * 2t/(e^{2t}+1); rhs is already divided by t
        for n in 1..=order {
            assert_eq!(lhs.coeff(n - 1), rhs.coeff(n));
        }
        assert!(rhs.coeff(0).is_zero());
    }

    #[test]
    fn tables() {
        assert_eq!(bernoulli_table_csv(2), "1\n-1/2,1\n1/6,-1,1\n");
        assert_eq!(
            bernoulli_table_json(1).to_string(),
            r#"[["1"],["-1/2","1"]]"#
        );
    }
}
