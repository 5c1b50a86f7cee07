//! Exact computation of Eulerian polynomials and the congruences that
//! characterize them.
//!
//! Everything is exact rational arithmetic. The main entry points:
//!
//! - [`eulerian`]: the Eulerian triangle and `A_l(x)` by several routes;
//! - [`bernoulli`]: Bernoulli polynomials and their bridges to `A_l`;
//! - [`shift`]: shift-operator calculus, the Worpitzky identity and the two
//!   closed forms of the Linial characteristic polynomial;
//! - [`congruence`]: the congruence `A_l(x^m) = ((1+...+x^(m-1))/m)^(l+1) A_l(x)`
//!   modulo `(x-1)^(l+1)`, and the solver that recovers `A_l` from it;
//! - [`audit`]: every invariant above as one bounded battery;
//! - [`cli`]: the `eulerian` command-line front end.
//!
//! ```
//! use eulerian_congruence::{congruence, eulerian};
//!
//! let a4 = eulerian::eulerian_poly(4);
//! assert_eq!(a4.display_ascending("x"), "x + 11x^2 + 11x^3 + x^4");
//!
//! let report = congruence::congruence_report(&a4, 4, 3).unwrap();
//! assert!(report.holds);
//!
//! let solved = congruence::solve_characterization(4, 3).unwrap();
//! assert_eq!(solved.solution, a4);
//! ```

pub mod audit;
pub mod bernoulli;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod eulerian;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod series;
pub mod shift;

pub use error::{Error, Result};
pub use poly::Poly;
pub use rational::Rational;

/// Two polynomials that an identity says are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdentity {
    pub lhs: Poly,
    pub rhs: Poly,
    pub holds: bool,
}

impl PolyIdentity {
    pub fn new(lhs: Poly, rhs: Poly) -> Self {
        let holds = lhs == rhs;
        PolyIdentity { lhs, rhs, holds }
    }
}
