//! Point counting over finite fields, zeta reconstruction via the trace
//! formula, global L-objects, and exact Laurent leading terms at integer
//! points.

mod bernoulli;
mod gf;
mod leading;
mod reconstruct;
mod variety;

pub use bernoulli::{bernoulli, zeta_at_integer, ZetaAt};
pub use gf::GaloisField;
pub use leading::{euler_leading, zetaword_leading, LaurentLeading, ZetaWord};
pub use reconstruct::{zeta_from_counts, ZetaFunction};
pub use variety::{parse_int_poly, point_count, IntPoly, VarietyKind, VarietySpec};

use thiserror::Error;

/// Default enumeration budget in candidate points.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum ZetaError {
    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("need at least {need} counts, got {have}")]
    NotEnoughCounts { have: usize, need: usize },
    #[error("no rational function of the given degrees matches the counts")]
    Inconsistent,
    #[error("surplus count validation failed at order {at}")]
    ValidationFailed { at: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad Euler factor: {0}")]
    BadFactor(String),
}
