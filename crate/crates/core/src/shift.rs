//! Polynomials in the shift operator `S`, acting on polynomials in `t` by
//! `(S^k f)(t) = f(t - k)`.

use std::ops::{Mul, Sub};

use num_traits::{One, Zero};

use crate::eulerian::eulerian_poly;
use crate::poly::{binom_poly, Poly};
use crate::rational::{int, Rational};
use crate::PolyIdentity;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOperator {
    symbol: Poly,
}

impl ShiftOperator {
    pub fn new(symbol: Poly) -> Self {
        ShiftOperator { symbol }
    }

    pub fn identity() -> Self {
        ShiftOperator::new(Poly::one())
    }

    /// `S^k`
    pub fn shift(k: usize) -> Self {
        ShiftOperator::new(Poly::monomial(Rational::one(), k))
    }

    pub fn symbol(&self) -> &Poly {
        &self.symbol
    }

    pub fn is_zero(&self) -> bool {
        self.symbol.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        ShiftOperator::new(self.symbol.pow(e))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ShiftOperator::new(self.symbol.scale(c))
    }

    /// `sum_k c_k f(t - k)`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.symbol
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Poly::zero(), |acc, (k, c)| {
                &acc + &f.taylor_shift(&int(-(k as i64))).scale(c)
            })
    }

    /// Division by `(S - 1)^k`, returned as `(quotient, remainder)`.
    pub fn div_rem_shift_minus_one(&self, k: usize) -> (ShiftOperator, ShiftOperator) {
        let (q, r) = self.symbol.div_rem_power(&Rational::one(), k);
        (ShiftOperator::new(q), ShiftOperator::new(r))
    }
}

impl Mul for &ShiftOperator {
    type Output = ShiftOperator;
    fn mul(self, rhs: &ShiftOperator) -> ShiftOperator {
        ShiftOperator::new(&self.symbol * &rhs.symbol)
    }
}

impl Sub for &ShiftOperator {
    type Output = ShiftOperator;
    fn sub(self, rhs: &ShiftOperator) -> ShiftOperator {
        ShiftOperator::new(&self.symbol - &rhs.symbol)
    }
}

/// `((1 + S + ... + S^m) / (m + 1))^(ell + 1)`
fn averaging_operator(ell: usize, m: usize) -> ShiftOperator {
    ShiftOperator::new(Poly::geometric(m + 1))
        .scale(&(Rational::one() / int(m as i64 + 1)))
        .pow(ell as u32 + 1)
}

/// `A_ell(S) C(t + ell, ell)` against `t^ell`.
pub fn worpitzky_check(ell: usize) -> PolyIdentity {
    let lhs = ShiftOperator::new(eulerian_poly(ell)).apply(&binom_poly(ell as i64, ell));
    PolyIdentity::new(lhs, Poly::monomial(Rational::one(), ell))
}

/// Characteristic polynomial of the extended Linial arrangement via the
/// averaging operator applied to `t^ell`.
pub fn linial_char_poly_ps(ell: usize, m: usize) -> Poly {
    averaging_operator(ell, m).apply(&Poly::monomial(Rational::one(), ell))
}

/// Characteristic polynomial of the extended Linial arrangement as
/// `A_ell(S^(m+1)) C(t + ell, ell)`. With `m = 0` this is the Worpitzky
/// identity and returns `t^ell`.
pub fn linial_char_poly_worp(ell: usize, m: usize) -> Poly {
    ShiftOperator::new(eulerian_poly(ell).compose_monomial(m + 1))
        .apply(&binom_poly(ell as i64, ell))
}

/// Both closed forms side by side.
pub fn linial_both(ell: usize, m: usize) -> PolyIdentity {
    PolyIdentity::new(linial_char_poly_ps(ell, m), linial_char_poly_worp(ell, m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorDivision {
    /// `avg^(ell+1) A_ell(S) - A_ell(S^(m+1))`
    pub operator: ShiftOperator,
    pub quotient: ShiftOperator,
    pub remainder: ShiftOperator,
}

/// Divides the difference of the two Linial operators by `(S - 1)^(ell+1)`.
pub fn operator_divisibility(ell: usize, m: usize) -> OperatorDivision {
    let a = eulerian_poly(ell);
    let left = &averaging_operator(ell, m) * &ShiftOperator::new(a.clone());
    let right = ShiftOperator::new(a.compose_monomial(m + 1));
    let operator = &left - &right;
    let (quotient, remainder) = operator.div_rem_shift_minus_one(ell + 1);
    OperatorDivision {
        operator,
        quotient,
        remainder,
    }
}
