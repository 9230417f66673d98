//! Exact arithmetic: big integers and rationals, univariate polynomials and
//! rational functions over `Q(parameters)`, and the polynomial subroutines
//! that hypergeometric summation needs.

mod field;
mod linalg;
pub mod mpoly;
mod ops;
mod poly;
mod ratfunc;

pub use field::{CoefficientField, FieldElem};
pub use linalg::{nullspace, solve_linear};
pub use mpoly::MPoly;
pub use ops::{dispersion_set, poly_gcd, poly_shift, resultant, solve_degree_bounded};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;

use thiserror::Error;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("domain error: {0}")]
    Domain(String),
}
