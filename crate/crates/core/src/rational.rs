//! Scalar helpers around [`num_rational::BigRational`].
//!
//! `BigRational` keeps every value in lowest terms with a positive
//! denominator, so structural equality is mathematical equality.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient C(n, k) for a possibly negative upper index, zero when k < 0.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * int(n - i) / int(i + 1);
    }
    acc.to_integer()
}

/// Parses `p/q`, `-p/q` or `p`. Zero denominators are rejected.
pub fn parse(token: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("bad coefficient {token:?}"));
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {token:?}")));
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or `p` when the denominator is one.
pub fn format(r: &Rational) -> String {
    r.to_string()
}
