//! Eulerian numbers and polynomials.
//!
//! `A_l(x) = sum_k A(l, k) x^k` is the numerator of
//! `sum_{k>=1} k^l x^k = A_l(x) / (1 - x)^(l+1)`. The triangle is built from
//! the recurrence `A(l, k) = k A(l-1, k) + (l-k+1) A(l-1, k-1)`; the
//! alternating binomial sum and the series numerator are kept as independent
//! routes for cross-checking.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{binom_poly, Poly};
use crate::rational::{self, factorial, from_bigint, int, Rational};
use crate::series::{expand_quotient, SeriesT, SeriesX};

/// Rows `1..=ell` of the Eulerian triangle; row `l` holds `A(l, 1..=l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianTable {
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn ell(&self) -> usize {
        self.rows.len()
    }

    /// `A(l, 1..=l)`. Panics if `l` is 0 or beyond the table.
    pub fn row(&self, l: usize) -> &[BigInt] {
        &self.rows[l - 1]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `A(l, k)`, zero outside `1 <= k <= l`.
    pub fn get(&self, l: usize, k: i64) -> BigInt {
        if l == 0 || l > self.rows.len() || k < 1 || k as usize > l {
            return BigInt::zero();
        }
        self.rows[l - 1][k as usize - 1].clone()
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<BigInt>> {
        &mut self.rows
    }

    /// One line per row, entries comma separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of rows, each an array of decimal integer strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|a| serde_json::Value::from(a.to_string()))
                        .collect()
                })
                .collect(),
        )
    }
}

pub fn eulerian_table(ell: usize) -> EulerianTable {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(ell);
    if ell >= 1 {
        rows.push(vec![BigInt::one()]);
    }
    for l in 2..=ell {
        let prev = &rows[l - 2];
        let at = |k: usize| -> BigInt {
            if k >= 1 && k < l {
                prev[k - 1].clone()
            } else {
                BigInt::zero()
            }
        };
        let row = (1..=l)
            .map(|k| BigInt::from(k) * at(k) + BigInt::from(l - k + 1) * at(k - 1))
            .collect();
        rows.push(row);
    }
    EulerianTable { rows }
}

/// `A(l, k) = sum_{j=0}^{k} (-1)^j C(l+1, j) (k-j)^l`, returning zero for
/// `k` outside `1..=l`.
pub fn eulerian_number_direct(ell: usize, k: i64) -> BigInt {
    if ell == 0 || k < 1 || k > ell as i64 {
        return BigInt::zero();
    }
    (0..=k)
        .map(|j| {
            let term = rational::binomial(ell as i64 + 1, j) * BigInt::from(k - j).pow(ell as u32);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `A_ell(x)`, with `A_0(x) = 1`.
pub fn eulerian_poly(ell: usize) -> Poly {
    if ell == 0 {
        return Poly::one();
    }
    let table = eulerian_table(ell);
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(table.row(ell).iter().cloned().map(from_bigint));
    Poly::from_coeffs(coeffs)
}

/// `sum_{k=1}^{order} k^ell x^k`.
pub fn frobenius_series(ell: usize, order: usize) -> SeriesX {
    SeriesX::from_fn(order, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            from_bigint(BigInt::from(k).pow(ell as u32))
        }
    })
}

/// The polynomial `alpha` of degree `<= ell` with
/// `f(x) / (1 - x)^(ell+1) = sum_k alpha(k) x^k`.
///
/// Interpolates the series coefficients at `k = 0..=ell` (Newton form on
/// unit nodes) and checks the result against `k = ell+1..=2ell+1`.
pub fn alpha_polynomial(f: &Poly, ell: usize) -> Result<Poly> {
    if f.degree().is_some_and(|d| d > ell) {
        return Err(Error::InvalidArgument(format!("degree of f exceeds {ell}")));
    }
    let series = expand_quotient(f, ell + 1, 2 * ell + 1)?;
    let mut diffs: Vec<Rational> = series.coeffs()[..=ell].to_vec();
    let mut alpha = Poly::zero();
    for j in 0..=ell {
        alpha = &alpha + &binom_poly(0, j).scale(&diffs[0]);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    for k in ell + 1..=2 * ell + 1 {
        if alpha.eval(&int(k as i64)) != *series.coeff(k) {
            return Err(Error::InterpolationMismatch {
                degree: ell,
                index: k,
            });
        }
    }
    Ok(alpha)
}

/// Both sides of the exponential generating function identity for `A_l(x)`.
#[derive(Clone, Debug)]
pub struct EgfCheck {
    /// `sum_{l <= L} A_l(x) t^l / l!`
    pub lhs: SeriesT,
    /// `(1 - x) / (1 - x e^{t(1-x)})` truncated at `t^L`
    pub rhs: SeriesT,
    pub agree: bool,
}

pub fn egf_eulerian_check(order: usize) -> Result<EgfCheck> {
    let lhs = SeriesT::from_fn(order, |l| {
        eulerian_poly(l).scale(&(Rational::one() / from_bigint(factorial(l))))
    });
    let one_minus_x = Poly::from_ints(&[1, -1]);
    let num = SeriesT::from_fn(order, |n| {
        if n == 0 {
            one_minus_x.clone()
        } else {
            Poly::zero()
        }
    });
    let unit = SeriesT::from_scalars(order, |n| if n == 0 { int(1) } else { int(0) });
    let den = unit.sub(&SeriesT::exp_of(&one_minus_x, order).scale(&Poly::var()));
    let rhs = num.divide(&den)?;
    let agree = lhs == rhs;
    Ok(EgfCheck { lhs, rhs, agree })
}

/// `A_ell(-1)` by direct evaluation.
pub fn eulerian_at_minus_one(ell: usize) -> Rational {
    eulerian_poly(ell).eval(&int(-1))
}

/// `l! [t^l] 2 / (1 + e^{2t})` for `l = 0..=order`.
pub fn eulerian_at_minus_one_via_egf(order: usize) -> Result<Vec<Rational>> {
    let two = SeriesT::from_scalars(order, |n| if n == 0 { int(2) } else { int(0) });
    let unit = SeriesT::from_scalars(order, |n| if n == 0 { int(1) } else { int(0) });
    let den = unit.add(&SeriesT::exp_of(&Poly::constant(int(2)), order));
    let q = two.divide(&den)?;
    Ok(q.coeffs()
        .iter()
        .enumerate()
        .map(|(l, p)| p.coeff(0) * from_bigint(factorial(l)))
        .collect())
}

/// Whether `A_l(-1)` agrees with the generating-function route for all `l <= order`.
pub fn egf_minus_one_check(order: usize) -> Result<bool> {
    let via_egf = eulerian_at_minus_one_via_egf(order)?;
    Ok(via_egf
        .iter()
        .enumerate()
        .all(|(l, v)| *v == eulerian_at_minus_one(l)))
}
