//! Exact arithmetic for the field Q(u_1,...,u_m), specialized to fractions
//! whose denominators are products of linear forms in the u's.
//!
//! Every denominator produced by the fixed-point graph sum is a product of
//! linear forms (tangent weights and their integer shifts), so fractions are
//! kept as a sparse polynomial numerator over a multiset of linear factors.
//! Cancellation only ever needs exact division by a linear form; no general
//! multivariate GCD is involved.

mod frac;
mod linform;
mod parse;
mod poly;

pub use frac::LinFrac;
pub use linform::LinearForm;
pub use parse::{parse_frac, parse_poly, ParseError};
pub use poly::SparsePoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar; the coefficient domain everywhere.
pub type Rat = BigRational;

/// Shorthand for an integer-valued `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q` as a `Rat`. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// A point u = (u_1,...,u_m) at which fractions can be evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub values: Vec<Rat>,
}

impl Specialization {
    pub fn new(values: Vec<Rat>) -> Self {
        Specialization { values }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Specialization {
            values: values.iter().map(|&v| rat_int(v)).collect(),
        }
    }
}

/// Errors raised by field operations on `LinFrac`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// A denominator factor vanishes at the requested point.
    PoleAtPoint,
    /// Division by the zero fraction.
    DivisionByZero,
    /// The numerator is not a rational scalar times a product of linear forms
    /// (or the extraction gave up), so the inverse leaves the representable set.
    InversionUnsupported,
    /// Degree queried on the zero fraction.
    ZeroInput,
}

impl std::fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraError::PoleAtPoint => write!(f, "a denominator factor vanishes at the point"),
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::InversionUnsupported => {
                write!(f, "numerator is not a scalar times a product of linear forms")
            }
            AlgebraError::ZeroInput => write!(f, "zero input"),
        }
    }
}

impl std::error::Error for AlgebraError {}
