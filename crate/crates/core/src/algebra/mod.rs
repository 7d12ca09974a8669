//! Exact scalars, parameter polynomials and truncated power series.

mod param_poly;
mod rational;
mod ring;
mod series;
mod unipoly;

pub use param_poly::{Exponents, ParamPoly};
pub use rational::Rational;
pub use ring::Ring;
pub use series::{TruncSeries, Var};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("series variable mismatch: {0} vs {1}")]
    VariableMismatch(Var, Var),
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("{0} requires a series with zero constant term")]
    NonZeroConstant(&'static str),
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty coefficient list")]
    EmptySeries,
    #[error("parse error: {0}")]
    Parse(String),
}
