//! Exact arithmetic in a field of symbolic periods `Q(symbols)(i)` with a
//! conjugation involution and decidable equality modulo nonzero rationals.
//!
//! Symbols (log p, pi, odd zeta values, ...) are treated as algebraically
//! independent over Q; the imaginary unit is built in with `i^2 = -1`.
//! Every value is kept in a unique canonical form: a reduced fraction of
//! multivariate polynomials with the denominator free of `i` and monic with
//! respect to the fixed monomial order.

mod parse;
mod poly;
mod symbols;
mod value;

pub use parse::parse_period;
pub use symbols::{Conjugation, SymbolId, SymbolTable};
pub use value::PeriodValue;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PeriodError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` already declared with a different conjugation")]
    ConflictingDeclaration(String),
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
    #[error("parse error: {0}")]
    Parse(String),
}
