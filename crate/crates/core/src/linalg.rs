//! Exact linear systems by fraction-free (Bareiss) elimination.
//!
//! Each row is first scaled to integers; elimination then runs over
//! `BigInt`, where every division by the previous pivot is exact. Only the
//! final back substitution touches rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{from_bigint, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub rank: usize,
    pub consistent: bool,
    /// Consistent with full column rank.
    pub unique: bool,
    /// A solution (free variables set to zero) when the system is consistent.
    pub solution: Option<Vec<Rational>>,
}

fn integer_row(coeffs: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let lcm = coeffs
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    coeffs
        .iter()
        .chain(std::iter::once(rhs))
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// Solves `a x = b` for `x` with `a` given row-major (`a.len()` equations,
/// `unknowns` columns each).
pub fn solve_fraction_free(a: &[Vec<Rational>], b: &[Rational], unknowns: usize) -> LinearSolution {
    assert_eq!(a.len(), b.len(), "one right-hand side per equation");
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(
                row.len(),
                unknowns,
                "row width must match the unknown count"
            );
            integer_row(row, rhs)
        })
        .collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..=unknowns {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss step must divide exactly");
                m[i][j] = q;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    let rank = r;
    let consistent = m[rank..].iter().all(|row| row[unknowns].is_zero());
    let solution = consistent.then(|| {
        let mut x = vec![Rational::zero(); unknowns];
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let mut acc = from_bigint(m[k][unknowns].clone());
            for j in pc + 1..unknowns {
                acc -= from_bigint(m[k][j].clone()) * &x[j];
            }
            x[pc] = acc / from_bigint(m[k][pc].clone());
        }
        x
    });
    LinearSolution {
        rank,
        consistent,
        unique: consistent && rank == unknowns,
        solution,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    // Plain Gauss-Jordan over the rationals, for comparison.
    fn rank_oracle(a: &[Vec<Rational>]) -> usize {
        let mut m = a.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let piv = m[r][c].clone();
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = &m[i][c] / &piv;
                    for j in 0..cols {
                        let d = &f * &m[r][j];
                        m[i][j] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|r| r.iter().map(|&c| int(c)).collect())
            .collect()
    }

    #[test]
    fn square_system() {
        let a = rows(&[&[2, 1, -1], &[-3, -1, 2], &[-2, 1, 2]]);
        let b = vec![int(8), int(-11), int(-3)];
        let s = solve_fraction_free(&a, &b, 3);
        assert!(s.unique);
        assert_eq!(s.solution.unwrap(), vec![int(2), int(3), int(-1)]);
    }

    #[test]
    fn rational_entries_and_overdetermined() {
        let a = vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), int(-1)],
            vec![int(1), int(1)],
        ];
        // x = 6, y = -3
        let b = vec![int(2), ratio(9, 2), int(3)];
        let s = solve_fraction_free(&a, &b, 2);
        assert_eq!(s.rank, 2);
        assert!(s.unique);
        assert_eq!(s.solution.unwrap(), vec![int(6), int(-3)]);
    }

    #[test]
    fn inconsistent_and_deficient() {
        let a = rows(&[&[1, 1], &[2, 2]]);
        let s = solve_fraction_free(&a, &[int(1), int(3)], 2);
        assert!(!s.consistent);
        assert!(s.solution.is_none());
        let s = solve_fraction_free(&a, &[int(1), int(2)], 2);
        assert!(s.consistent && !s.unique);
        assert_eq!(s.rank, 1);
        assert_eq!(s.solution.unwrap(), vec![int(1), int(0)]);
    }

    proptest! {
        #[test]
        fn recovers_planted_solution(
            entries in prop::collection::vec(-5i64..=5, 20),
            x in prop::collection::vec((-6i64..=6, 1i64..=4), 4),
        ) {
            let a: Vec<Vec<Rational>> = entries.chunks(4).map(|r| r.iter().map(|&c| int(c)).collect()).collect();
            let x: Vec<Rational> = x.into_iter().map(|(n, d)| ratio(n, d)).collect();
            let b: Vec<Rational> = a.iter().map(|row| row.iter().zip(&x).map(|(p, q)| p * q).sum()).collect();
            let s = solve_fraction_free(&a, &b, 4);
            prop_assert!(s.consistent);
            prop_assert_eq!(s.rank, rank_oracle(&a));
            let sol = s.solution.unwrap();
            for (row, rhs) in a.iter().zip(&b) {
                let lhs: Rational = row.iter().zip(&sol).map(|(p, q)| p * q).sum();
                prop_assert_eq!(&lhs, rhs);
            }
            if s.unique {
                prop_assert_eq!(sol, x);
            }
        }
    }
}
