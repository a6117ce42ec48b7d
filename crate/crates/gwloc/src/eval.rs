//! A small ring abstraction so the localization formulas are written once and
//! run either symbolically (values in Q(u)) or at an exact rational point.
//!
//! Every division the graph sum performs is by a nonzero linear form, so the
//! interface only exposes `inv_linear`; at a point this can hit a pole, which
//! the caller handles by resampling.

use crate::algebra::{AlgebraError, LinFrac, LinearForm, Rat, SparsePoly, Specialization};
use num_traits::Zero;

pub trait Evaluator: Sync {
    type Value: Clone + Send + Sync + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn from_rat(&self, c: &Rat) -> Self::Value;
    fn from_linear(&self, lf: &LinearForm) -> Self::Value;
    fn from_poly(&self, p: &SparsePoly) -> Self::Value;
    fn inv_linear(&self, lf: &LinearForm) -> Result<Self::Value, AlgebraError>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;

    fn is_zero(&self, a: &Self::Value) -> bool;

    fn scale(&self, a: &Self::Value, c: &Rat) -> Self::Value {
        self.mul(a, &self.from_rat(c))
    }

    /// lf^e for e possibly negative.
    fn linear_pow(&self, lf: &LinearForm, e: i64) -> Result<Self::Value, AlgebraError> {
        let base = if e >= 0 {
            self.from_linear(lf)
        } else {
            self.inv_linear(lf)?
        };
        let mut out = self.one();
        for _ in 0..e.unsigned_abs() {
            out = self.mul(&out, &base);
        }
        Ok(out)
    }
}

/// Symbolic evaluation in Q(u_1..u_m).
pub struct Symbolic {
    pub nvars: usize,
}

impl Evaluator for Symbolic {
    type Value = LinFrac;

    fn zero(&self) -> LinFrac {
        LinFrac::zero(self.nvars)
    }
    fn one(&self) -> LinFrac {
        LinFrac::one(self.nvars)
    }
    fn from_rat(&self, c: &Rat) -> LinFrac {
        LinFrac::constant(self.nvars, c.clone())
    }
    fn from_linear(&self, lf: &LinearForm) -> LinFrac {
        LinFrac::from_linear(lf)
    }
    fn from_poly(&self, p: &SparsePoly) -> LinFrac {
        LinFrac::from_poly(p.clone())
    }
    fn inv_linear(&self, lf: &LinearForm) -> Result<LinFrac, AlgebraError> {
        if lf.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(LinFrac::inv_linear(lf))
    }
    fn add(&self, a: &LinFrac, b: &LinFrac) -> LinFrac {
        a.add(b)
    }
    fn mul(&self, a: &LinFrac, b: &LinFrac) -> LinFrac {
        a.mul(b)
    }
    fn neg(&self, a: &LinFrac) -> LinFrac {
        a.clone().neg()
    }
    fn is_zero(&self, a: &LinFrac) -> bool {
        a.is_zero()
    }
}

/// Exact evaluation at a rational point.
pub struct AtPoint {
    pub point: Specialization,
}

impl Evaluator for AtPoint {
    type Value = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        num_traits::One::one()
    }
    fn from_rat(&self, c: &Rat) -> Rat {
        c.clone()
    }
    fn from_linear(&self, lf: &LinearForm) -> Rat {
        lf.eval(&self.point)
    }
    fn from_poly(&self, p: &SparsePoly) -> Rat {
        p.eval(&self.point)
    }
    fn inv_linear(&self, lf: &LinearForm) -> Result<Rat, AlgebraError> {
        let v = lf.eval(&self.point);
        if v.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(v.recip())
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
}
