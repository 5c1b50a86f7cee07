//! Dense univariate polynomials with exact rational coefficients.
//!
//! The same type stands in for polynomials in `x`, in `t`, and for operator
//! polynomials in the shift symbol `S`; the variable name only matters when
//! rendering.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, factorial, from_bigint, int, Rational};

/// Coefficient `i` multiplies the `i`-th power of the indeterminate. The
/// highest stored coefficient is always nonzero; the zero polynomial is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * var^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// `1 + var + ... + var^(n-1)`
    pub fn geometric(n: usize) -> Self {
        Poly::from_coeffs(vec![Rational::one(); n])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().take(n).cloned().collect())
    }

    /// `q(u) = p(u + c)`, by repeated synthetic division (Horner).
    pub fn taylor_shift(&self, c: &Rational) -> Poly {
        if c.is_zero() || self.coeffs.len() < 2 {
            return self.clone();
        }
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let carry = &a[j + 1] * c;
                a[j] += carry;
            }
        }
        Poly::from_coeffs(a)
    }

    /// `p(var^m)`.
    pub fn compose_monomial(&self, m: usize) -> Poly {
        assert!(m >= 1, "compose_monomial needs m >= 1");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// `p(-var)`.
    pub fn negate_var(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Division by `(var - c)^k`: returns `(quotient, remainder)` with
    /// `self = quotient * (var - c)^k + remainder` and `deg remainder < k`.
    ///
    /// Both parts come from one Taylor shift to `c`: the low `k` coefficients
    /// of the shifted polynomial give the remainder, the rest the quotient.
    pub fn div_rem_power(&self, c: &Rational, k: usize) -> (Poly, Poly) {
        assert!(k >= 1, "div_rem_power needs k >= 1");
        let shifted = self.taylor_shift(c);
        let split = k.min(shifted.coeffs.len());
        let rem = Poly::from_coeffs(shifted.coeffs[..split].to_vec());
        let quo = Poly::from_coeffs(shifted.coeffs[split..].to_vec());
        let back = -c.clone();
        (quo.taylor_shift(&back), rem.taylor_shift(&back))
    }

    pub fn remainder_mod_power(&self, c: &Rational, k: usize) -> Poly {
        self.div_rem_power(c, k).1
    }

    /// Euclidean division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::InvalidArgument("division by the zero polynomial".into()))?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quo = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quo.len()).rev() {
            let q = &rem[i + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quo[i] = q;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quo), Poly::from_coeffs(rem)))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Space-separated coefficients, lowest degree first (`"0 1 1"` is
    /// `x + x^2`). The zero polynomial renders as `"0"`.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(rational::format)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse_canonical(text: &str) -> Result<Poly> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        let coeffs = tokens
            .into_iter()
            .map(rational::parse)
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// Human-readable form, lowest degree first: `x + 11x^2 + 11x^3 + x^4`.
    pub fn display_ascending(&self, var: &str) -> String {
        self.render(var, self.terms())
    }

    /// Human-readable form, highest degree first: `t^2 - 3t + 3`.
    pub fn display_descending(&self, var: &str) -> String {
        self.render(var, self.terms().rev())
    }

    fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn render<'a>(&self, var: &str, terms: impl Iterator<Item = (usize, &'a Rational)>) -> String {
        let mut out = String::new();
        for (i, (k, c)) in terms.enumerate() {
            let negative = *c < Rational::zero();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = if negative { -c.clone() } else { c.clone() };
            if k == 0 || !mag.is_one() {
                out.push_str(&rational::format(&mag));
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `C(t + a, n) = (t+a)(t+a-1)...(t+a-n+1) / n!` as a polynomial in `t`.
pub fn binom_poly(a: i64, n: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 0..n as i64 {
        acc = &acc * &Poly::from_coeffs(vec![int(a - i), Rational::one()]);
    }
    acc.scale(&(Rational::one() / from_bigint(factorial(n))))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_ascending("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
