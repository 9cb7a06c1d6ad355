//! Exact arithmetic: rationals, surd numbers, polynomials, rational functions.

pub mod factor;
pub mod linsys;
pub mod partial;
pub mod poly;
pub mod ratfun;
pub mod surd;

pub use factor::{factor_linear, primitive_part, rational_roots, LinearFactorization};
pub use linsys::{solve_linear_system, solve_polynomial_identity, solve_rational_identity, LinearOperator};
pub use partial::{partial_fractions, PartialFractionForm};
pub use poly::{power_series_quotient, Polynomial};
pub use ratfun::RationalFunction;
pub use surd::SurdNumber;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
