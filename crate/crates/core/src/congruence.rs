//! The Eulerian congruence and its converse.
//!
//! For a polynomial `f` of degree `<= l` and `m >= 2`, the *defect* is
//!
//! ```text
//! f(x^m) - ((1 + x + ... + x^(m-1)) / m)^(l+1) f(x)
//! ```
//!
//! `A_l` is the only monic degree-`l` polynomial whose defect vanishes modulo
//! `(x - 1)^(l+1)`. This module checks that statement in both directions:
//! [`congruence_report`] verifies a given `f`, and [`solve_characterization`]
//! recovers `A_l` from the congruence alone by solving for the coefficients.
//!
//! Quotients are taken against powers of `(x - 1)`. Against `(1 - x)^(l+1)`
//! they differ by `(-1)^(l+1)`; see [`CongruenceReport::quotient_one_minus_x`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_traits::One;

use crate::error::{Error, Result};
use crate::eulerian::{eulerian_poly, frobenius_series};
use crate::linalg::solve_fraction_free;
use crate::poly::Poly;
use crate::rational::{self, int, Rational};

fn check_args(ell: usize, m: usize) -> Result<()> {
    if ell < 1 {
        return Err(Error::InvalidArgument(format!(
            "ell must be >= 1, got {ell}"
        )));
    }
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m must be >= 2, got {m}")));
    }
    Ok(())
}

/// `((1 + x + ... + x^(m-1)) / m)^(ell+1)`
fn averaged_geometric(ell: usize, m: usize) -> Poly {
    Poly::geometric(m)
        .scale(&(Rational::one() / int(m as i64)))
        .pow(ell as u32 + 1)
}

pub fn congruence_defect(f: &Poly, ell: usize, m: usize) -> Poly {
    &f.compose_monomial(m) - &(&averaged_geometric(ell, m) * f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    pub ell: usize,
    pub m: usize,
    pub f: Poly,
    pub defect: Poly,
    /// `defect mod (x - 1)^(ell+1)`
    pub remainder: Poly,
    /// `defect = (x - 1)^(ell+1) * quotient + remainder`
    pub quotient: Poly,
    pub holds: bool,
}

impl CongruenceReport {
    /// The quotient against `(1 - x)^(ell+1)` instead of `(x - 1)^(ell+1)`.
    pub fn quotient_one_minus_x(&self) -> Poly {
        if self.ell.is_multiple_of(2) {
            -&self.quotient
        } else {
            self.quotient.clone()
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ell": self.ell,
            "m": self.m,
            "f": coeff_strings(&self.f),
            "holds": self.holds,
            "remainder": coeff_strings(&self.remainder),
            "quotient": coeff_strings(&self.quotient),
            "defect": coeff_strings(&self.defect),
        })
    }
}

/// Coefficients as `p/q` strings, lowest degree first; `[]` for zero.
pub fn coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rational::format).collect()
}

pub fn congruence_report(f: &Poly, ell: usize, m: usize) -> Result<CongruenceReport> {
    check_args(ell, m)?;
    if f.degree().is_some_and(|d| d > ell) {
        return Err(Error::InvalidArgument(format!(
            "f has degree {} > ell = {ell}",
            f.degree().unwrap_or(0)
        )));
    }
    let defect = congruence_defect(f, ell, m);
    let (quotient, remainder) = defect.div_rem_power(&Rational::one(), ell + 1);
    Ok(CongruenceReport {
        ell,
        m,
        f: f.clone(),
        holds: remainder.is_zero(),
        defect,
        remainder,
        quotient,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrengthenedCheck {
    pub ell: usize,
    pub m: usize,
    /// Defect of `A_ell` modulo `(x - 1)^(ell+2)`.
    pub remainder: Poly,
    pub holds: bool,
}

/// The `A_ell` congruence one power higher, modulo `(x - 1)^(ell+2)`.
/// Expected to hold for even `ell`; for odd `ell` it is computed all the same.
pub fn even_ell_strengthening(ell: usize, m: usize) -> Result<StrengthenedCheck> {
    check_args(ell, m)?;
    let defect = congruence_defect(&eulerian_poly(ell), ell, m);
    let remainder = defect.remainder_mod_power(&Rational::one(), ell + 2);
    Ok(StrengthenedCheck {
        ell,
        m,
        holds: remainder.is_zero(),
        remainder,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M2Identity {
    /// `((1+x)/2)^(ell+1) A_ell(x) - A_ell(x^2)`
    pub lhs: Poly,
    /// `-((1-x)/2)^(ell+1) A_ell(-x)`
    pub rhs: Poly,
    pub holds: bool,
    /// `F(x) - 2^(ell+1) F(x^2) = -F(-x)` through `x^(4 ell)`.
    pub series_holds: bool,
}

pub fn m2_identity_check(ell: usize) -> Result<M2Identity> {
    check_args(ell, 2)?;
    let a = eulerian_poly(ell);
    let half = Rational::one() / int(2);
    let e = ell as u32 + 1;
    let lhs = &(&Poly::from_coeffs(vec![half.clone(), half.clone()]).pow(e) * &a)
        - &a.compose_monomial(2);
    let rhs = -&(&Poly::from_coeffs(vec![half.clone(), -half]).pow(e) * &a.negate_var());

    let order = 4 * ell;
    let f = frobenius_series(ell, order);
    let pow2 = rational::from_bigint(num_bigint::BigInt::from(2).pow(e));
    let series_lhs = f.sub(&f.compose_monomial(2).scale(&pow2));
    let series_rhs = f.negate_var().scale(&int(-1));
    Ok(M2Identity {
        holds: lhs == rhs,
        series_holds: series_lhs == series_rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomiality {
    pub order: usize,
    /// `(m-1)(ell+1) + m ell`
    pub degree_bound: usize,
    /// Index of the last nonzero coefficient of the truncated series.
    pub last_nonzero: Option<usize>,
    /// Terms of the truncated series through the degree bound.
    pub polynomial: Poly,
    pub holds: bool,
    /// `polynomial == m^(ell+1) * g` with `g` the `(1-x)` quotient of the `A_ell` defect.
    pub matches_quotient: bool,
}

/// Smallest truncation accepted by [`polynomiality_check`]:
/// `m(ell+1) + (m-1)(ell+1) + 2m(ell+1)`.
pub fn polynomiality_min_order(ell: usize, m: usize) -> usize {
    m * (ell + 1) + (m - 1) * (ell + 1) + 2 * m * (ell + 1)
}

/// Truncated expansion of
/// `(1 + ... + x^(m-1))^(ell+1) * (m sum (mk)^ell x^(mk) - sum k^ell x^k)`;
/// holds when every coefficient past the degree bound vanishes through `order`.
/// A finite truncation only corroborates polynomiality, it cannot prove it.
pub fn polynomiality_check(ell: usize, m: usize, order: usize) -> Result<Polynomiality> {
    check_args(ell, m)?;
    let required = polynomiality_min_order(ell, m);
    if order < required {
        return Err(Error::TruncationTooShort { order, required });
    }
    let f = frobenius_series(ell, order);
    let m_pow = rational::from_bigint(num_bigint::BigInt::from(m).pow(ell as u32 + 1));
    let inner = f.compose_monomial(m).scale(&m_pow).sub(&f);
    let series = inner.mul_poly(&Poly::geometric(m).pow(ell as u32 + 1));
    let degree_bound = (m - 1) * (ell + 1) + m * ell;
    let last_nonzero = series.last_nonzero();
    let polynomial = series.to_poly().truncate(degree_bound + 1);
    let g = congruence_report(&eulerian_poly(ell), ell, m)?.quotient_one_minus_x();
    Ok(Polynomiality {
        order,
        degree_bound,
        holds: last_nonzero.is_none_or(|k| k <= degree_bound),
        matches_quotient: polynomial == g.scale(&m_pow),
        last_nonzero,
        polynomial,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationSolution {
    pub ell: usize,
    pub m: usize,
    /// Monic of degree `ell`.
    pub solution: Poly,
    pub system_rank: usize,
    pub unique: bool,
}

/// Finds the monic `f = x^ell + a_1 x^(ell-1) + ... + a_ell` whose defect
/// vanishes modulo `(x - 1)^(ell+1)`.
///
/// The remainder is affine in the `a_i`, so its `ell + 1` coefficients are
/// assembled from the remainders of the monomials `x^0 .. x^ell` and the
/// resulting system is solved exactly.
pub fn solve_characterization(ell: usize, m: usize) -> Result<CharacterizationSolution> {
    check_args(ell, m)?;
    let remainder_of = |k: usize| {
        congruence_defect(&Poly::monomial(Rational::one(), k), ell, m)
            .remainder_mod_power(&Rational::one(), ell + 1)
    };
    let basis: Vec<Poly> = (0..=ell).map(remainder_of).collect();
    // unknown a_i multiplies x^(ell - i), i = 1..=ell
    let rows: Vec<Vec<Rational>> = (0..=ell)
        .map(|j| (1..=ell).map(|i| basis[ell - i].coeff(j)).collect())
        .collect();
    let rhs: Vec<Rational> = (0..=ell).map(|j| -basis[ell].coeff(j)).collect();
    let sol = solve_fraction_free(&rows, &rhs, ell);
    let values = sol.solution.ok_or(Error::Inconsistent)?;
    let mut coeffs = vec![Rational::one(); ell + 1];
    for (i, a) in values.into_iter().enumerate() {
        coeffs[ell - 1 - i] = a;
    }
    Ok(CharacterizationSolution {
        ell,
        m,
        solution: Poly::from_coeffs(coeffs),
        system_rank: sol.rank,
        unique: sol.unique,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub ell: usize,
    pub solutions: Vec<CharacterizationSolution>,
    pub all_equal: bool,
    pub matches_eulerian: bool,
}

/// Solves the characterization for every `m` (in parallel) and compares.
pub fn equivalence_audit(ell: usize, ms: &[usize]) -> Result<EquivalenceReport> {
    if ms.is_empty() {
        return Err(Error::InvalidArgument("need at least one m".into()));
    }
    let solutions = std::thread::scope(|scope| {
        let handles: Vec<_> = ms
            .iter()
            .map(|&m| scope.spawn(move || solve_characterization(ell, m)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("solver thread panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    let first = &solutions[0].solution;
    let all_equal = solutions.iter().all(|s| s.solution == *first && s.unique);
    let matches_eulerian = all_equal && *first == eulerian_poly(ell);
    Ok(EquivalenceReport {
        ell,
        solutions,
        all_equal,
        matches_eulerian,
    })
}

/// A polynomial of degree `< ell` whose coefficients are drawn from
/// `{-3, -2, -1, 1, 2, 3}`.
pub fn random_perturbation<R: Rng>(ell: usize, rng: &mut R) -> Poly {
    const CHOICES: [i64; 6] = [-3, -2, -1, 1, 2, 3];
    let coeffs: Vec<i64> = (0..ell)
        .map(|_| CHOICES[rng.gen_range(0..CHOICES.len())])
        .collect();
    Poly::from_ints(&coeffs)
}

/// Deterministic generator for the `(ell, m)` falsification batch.
pub fn perturbation_rng(seed: u64, ell: usize, m: usize) -> ChaCha8Rng {
    let stream = ((ell as u64) << 32) | m as u64;
    ChaCha8Rng::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Checks `count` perturbed polynomials `A_ell + p`; returns those that
/// (wrongly) satisfy the congruence.
pub fn falsification_sweep(ell: usize, m: usize, count: usize, seed: u64) -> Result<Vec<Poly>> {
    let mut rng = perturbation_rng(seed, ell, m);
    let base = eulerian_poly(ell);
    let mut survivors = Vec::new();
    for _ in 0..count {
        let f = &base + &random_perturbation(ell, &mut rng);
        if congruence_report(&f, ell, m)?.holds {
            survivors.push(f);
        }
    }
    Ok(survivors)
}
