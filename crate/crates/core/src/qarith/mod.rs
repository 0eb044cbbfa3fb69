//! Exact scalar arithmetic: rationals, Laurent polynomials and rational
//! functions in `q`, and the q-integers built from them.

mod laurent;
mod qnum;
mod ratfunc;
pub mod rational;
mod scalar;
mod zpoly;

pub use laurent::LaurentPoly;
pub use qnum::{q_binomial, q_factorial, q_falling, q_int};
pub use ratfunc::RationalFunction;
pub use rational::{format_rational, parse_rational, Rational};
pub use scalar::{specialize, Field, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("q = {0} is not an admissible specialization (must be nonzero and not +-1)")]
    InvalidSpecialization(Rational),
    #[error("denominator vanishes at q = {0}")]
    VanishingDenominator(Rational),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars from different coefficient fields")]
    MixedFields,
    #[error("parse error: {0}")]
    Parse(String),
}
