//! Truncated power series.
//!
//! [`SeriesX`] has rational coefficients in `x`; [`SeriesT`] has polynomial
//! (in `x`) coefficients in `t` and is used for exponential generating
//! functions. Both carry an explicit order `N`: coefficients through the
//! `N`-th power are exact, nothing beyond is represented. Binary operations
//! truncate to the smaller order.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{self, factorial, from_bigint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesX {
    coeffs: Vec<Rational>,
}

impl SeriesX {
    pub fn zero(order: usize) -> Self {
        SeriesX {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        SeriesX {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        SeriesX::from_fn(order, |k| p.coeff(k))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// The truncation as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, other: &SeriesX) -> SeriesX {
        let order = self.order().min(other.order());
        SeriesX::from_fn(order, |k| &self.coeffs[k] + &other.coeffs[k])
    }

    pub fn sub(&self, other: &SeriesX) -> SeriesX {
        let order = self.order().min(other.order());
        SeriesX::from_fn(order, |k| &self.coeffs[k] - &other.coeffs[k])
    }

    pub fn scale(&self, c: &Rational) -> SeriesX {
        SeriesX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &SeriesX) -> SeriesX {
        let order = self.order().min(other.order());
        let mut out = SeriesX::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Product with a polynomial, keeping this series' order.
    pub fn mul_poly(&self, p: &Poly) -> SeriesX {
        self.mul(&SeriesX::from_poly(p, self.order()))
    }

    /// `s(x^m)` at the same order.
    pub fn compose_monomial(&self, m: usize) -> SeriesX {
        assert!(m >= 1, "compose_monomial needs m >= 1");
        let order = self.order();
        SeriesX::from_fn(order, |k| {
            if k % m == 0 {
                self.coeffs[k / m].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// `s(-x)`.
    pub fn negate_var(&self) -> SeriesX {
        SeriesX::from_fn(self.order(), |k| {
            if k % 2 == 1 {
                -self.coeffs[k].clone()
            } else {
                self.coeffs[k].clone()
            }
        })
    }

    /// Index of the last nonzero coefficient, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

/// Truncated expansion of `p(x) / (1 - x)^d` through `x^order`, by convolving
/// `p` with the coefficients `C(k + d - 1, d - 1)` of `(1 - x)^(-d)`.
pub fn expand_quotient(p: &Poly, d: usize, order: usize) -> Result<SeriesX> {
    if d == 0 {
        return Err(Error::InvalidArgument(
            "denominator power must be >= 1".into(),
        ));
    }
    if let Some(deg) = p.degree() {
        if order < deg {
            return Err(Error::TruncationTooShort {
                order,
                required: deg,
            });
        }
    }
    let d = d as i64;
    let kernel: Vec<Rational> = (0..=order as i64)
        .map(|k| from_bigint(rational::binomial(k + d - 1, d - 1)))
        .collect();
    Ok(SeriesX::from_fn(order, |k| {
        p.coeffs()
            .iter()
            .enumerate()
            .take(k + 1)
            .map(|(i, c)| c * &kernel[k - i])
            .sum()
    }))
}

/// Truncated series in `t` whose coefficients are polynomials in `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesT {
    coeffs: Vec<Poly>,
}

impl SeriesT {
    pub fn zero(order: usize) -> Self {
        SeriesT {
            coeffs: vec![Poly::zero(); order + 1],
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Poly) -> Self {
        SeriesT {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// A series whose coefficients do not depend on `x`.
    pub fn from_scalars(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        SeriesT::from_fn(order, |n| Poly::constant(f(n)))
    }

    /// `exp(t * c(x)) = sum c(x)^n t^n / n!`.
    pub fn exp_of(c: &Poly, order: usize) -> Self {
        let mut power = Poly::one();
        SeriesT::from_fn(order, |n| {
            if n > 0 {
                power = &power * c;
            }
            power.scale(&(Rational::one() / from_bigint(factorial(n))))
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    /// Same series at a smaller order.
    pub fn truncate(&self, order: usize) -> SeriesT {
        SeriesT {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        SeriesT::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        SeriesT::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn scale(&self, c: &Poly) -> SeriesT {
        SeriesT {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &SeriesT) -> SeriesT {
        let order = self.order().min(other.order());
        let mut out = SeriesT::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                let term = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &term;
            }
        }
        out
    }

    /// Substitutes a value for `x` in every coefficient.
    pub fn eval_x(&self, at: &Rational) -> Vec<Rational> {
        self.coeffs.iter().map(|p| p.eval(at)).collect()
    }

    /// `self / den`, truncated to the common order.
    ///
    /// The `t^0` coefficient of `den` must be a nonzero constant, or a
    /// polynomial that divides every coefficient of both series exactly, in
    /// which case it is cancelled first (e.g. the `1 - x` in
    /// `(1 - x) / (1 - x e^{t(1-x)})`).
    pub fn divide(&self, den: &SeriesT) -> Result<SeriesT> {
        let order = self.order().min(den.order());
        let lead = den.coeffs[0].clone();
        let (num, den) = match lead.degree() {
            None => {
                return Err(Error::NonInvertible(
                    "t^0 coefficient of the denominator is zero".into(),
                ))
            }
            Some(0) => (self.truncate(order), den.truncate(order)),
            Some(_) => {
                let cancel = |s: &SeriesT| -> Result<SeriesT> {
                    let coeffs = s.coeffs[..=order]
                        .iter()
                        .map(|p| {
                            p.div_exact(&lead).ok_or_else(|| {
                                Error::NonInvertible(format!(
                                    "t^0 coefficient {} does not divide {}",
                                    lead.display_ascending("x"),
                                    p.display_ascending("x")
                                ))
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(SeriesT { coeffs })
                };
                (cancel(self)?, cancel(den)?)
            }
        };
        let inv_lead = Rational::one() / den.coeffs[0].coeff(0);
        let mut quo = SeriesT::zero(order);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for k in 1..=n {
                acc = &acc - &(&den.coeffs[k] * &quo.coeffs[n - k]);
            }
            quo.coeffs[n] = acc.scale(&inv_lead);
        }
        Ok(quo)
    }
}

/// Free-function form of [`SeriesT::divide`].
pub fn series_t_divide(num: &SeriesT, den: &SeriesT) -> Result<SeriesT> {
    num.divide(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn expand_quotient_examples() {
        let s = expand_quotient(&Poly::var(), 2, 4).unwrap();
        assert_eq!(s.coeffs(), &[int(0), int(1), int(2), int(3), int(4)]);
        let s = expand_quotient(&Poly::one(), 1, 3).unwrap();
        assert_eq!(s.coeffs(), &[int(1), int(1), int(1), int(1)]);
        // brute-force sum k^2 x^k
        let s = expand_quotient(&Poly::from_ints(&[0, 1, 1]), 3, 4).unwrap();
        let brute: Vec<_> = (0..=4).map(|k| int(k * k)).collect();
        assert_eq!(s.coeffs(), brute.as_slice());
    }

    #[test]
    fn expand_quotient_preconditions() {
        assert!(matches!(
            expand_quotient(&Poly::from_ints(&[0, 0, 0, 1]), 2, 2),
            Err(Error::TruncationTooShort {
                order: 2,
                required: 3
            })
        ));
        assert!(expand_quotient(&Poly::one(), 0, 3).is_err());
    }

    #[test]
    fn geometric_division() {
        let num = SeriesT::from_scalars(6, |n| if n == 0 { int(1) } else { int(0) });
        let den = SeriesT::from_scalars(6, |n| match n {
            0 => int(1),
            1 => int(-1),
            _ => int(0),
        });
        let q = num.divide(&den).unwrap();
        assert!(q.coeffs().iter().all(|p| *p == Poly::one()));
        assert_eq!(den.mul(&q), num);
    }

    #[test]
    fn division_cancels_polynomial_lead() {
        // (1 - x) / (1 - x e^{t(1-x)}), t^2 coefficient is (x + x^2)/2
        let one_minus_x = Poly::from_ints(&[1, -1]);
        let order = 4;
        let num = SeriesT::from_fn(order, |n| {
            if n == 0 {
                one_minus_x.clone()
            } else {
                Poly::zero()
            }
        });
        let exp = SeriesT::exp_of(&one_minus_x, order);
        let one = SeriesT::from_scalars(order, |n| if n == 0 { int(1) } else { int(0) });
        let den = one.sub(&exp.scale(&Poly::var()));
        let q = num.divide(&den).unwrap();
        assert_eq!(q.coeff(0), &Poly::one());
        assert_eq!(q.coeff(1), &Poly::var());
        assert_eq!(
            q.coeff(2),
            &Poly::from_coeffs(vec![int(0), ratio(1, 2), ratio(1, 2)])
        );
        assert_eq!(den.mul(&q), num);
    }

    #[test]
    fn division_rejects_non_invertible() {
        let num = SeriesT::from_scalars(3, |_| int(1));
        let zero_lead = SeriesT::from_scalars(3, |n| int(n as i64));
        assert!(matches!(
            num.divide(&zero_lead),
            Err(Error::NonInvertible(_))
        ));
        let x_lead = SeriesT::from_fn(3, |_| Poly::var());
        assert!(matches!(num.divide(&x_lead), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn series_x_substitutions() {
        let s = SeriesX::from_fn(6, |k| int(k as i64));
        assert_eq!(
            s.compose_monomial(2).coeffs(),
            &[int(0), int(0), int(1), int(0), int(2), int(0), int(3)]
        );
        assert_eq!(s.negate_var().coeff(3), &int(-3));
        assert_eq!(s.last_nonzero(), Some(6));
        assert_eq!(SeriesX::zero(3).last_nonzero(), None);
    }

    proptest! {
        #[test]
        fn expand_quotient_recovers_numerator(
            cs in prop::collection::vec(-5i64..=5, 0..6),
            d in 1usize..=5,
            extra in 0usize..6,
        ) {
            let p = Poly::from_ints(&cs);
            let order = p.degree().unwrap_or(0) + extra;
            let s = expand_quotient(&p, d, order).unwrap();
            let back = s.mul_poly(&Poly::from_ints(&[1, -1]).pow(d as u32));
            prop_assert_eq!(back.to_poly(), p.truncate(order + 1));
        }

        #[test]
        fn division_round_trip(
            num in prop::collection::vec(prop::collection::vec(-4i64..=4, 0..3), 5),
            den in prop::collection::vec(prop::collection::vec(-4i64..=4, 0..3), 4),
            lead in 1i64..=5,
        ) {
            let num = SeriesT::from_fn(4, |n| Poly::from_ints(&num[n]));
            let den = SeriesT::from_fn(3, |n| if n == 0 { Poly::constant(int(lead)) } else { Poly::from_ints(&den[n]) });
            let q = num.divide(&den).unwrap();
            prop_assert_eq!(q.order(), 3);
            prop_assert_eq!(den.mul(&q), num.truncate(3));
        }
    }
}
