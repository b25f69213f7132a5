//! Coefficient-ring abstraction shared by series and matrices.
//!
//! Exactly two rings implement it: [`Rational`](crate::Rational) scalars and
//! [`MultiPoly`](crate::MultiPoly) polynomials. The trait keeps series and
//! determinant code generic over the two without operator-overload noise.

use alloc::vec::Vec;
use core::fmt;

use crate::poly::ExponentVector;
use crate::rational::Rational;

/// Commutative ring with exact arithmetic and a rational scalar action.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplication by a rational scalar.
    fn scale(&self, k: &Rational) -> Self;

    /// Exact division; `None` when `rhs` is zero or does not divide `self`.
    /// Both rings are integral domains, so quotients are unique.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    /// Image of the integer `k` under the unique map from ℤ.
    fn from_int(k: i64) -> Self {
        Self::one().scale(&Rational::from(k))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Product with all monomials of weight above `cap` discarded. Rings
    /// without a grading (scalars have weight 0) multiply exactly, which is
    /// the default.
    fn mul_capped(&self, rhs: &Self, _cap: Option<u32>) -> Self {
        self.mul(rhs)
    }
}

/// Per-monomial sign data used by positivity scans.
///
/// A scalar is treated as a coefficient of the unit monomial, so a negative
/// `Rational` reports one negative term.
pub trait TermSigns {
    /// Terms with negative coefficient, ascending in the graded
    /// lexicographic order.
    fn negative_terms(&self) -> Vec<(ExponentVector, Rational)>;

    /// Nonzero, with every monomial coefficient strictly positive.
    fn is_strictly_positive(&self) -> bool;
}

impl TermSigns for Rational {
    fn negative_terms(&self) -> Vec<(ExponentVector, Rational)> {
        if self.is_negative() {
            alloc::vec![(ExponentVector::unit(), self.clone())]
        } else {
            Vec::new()
        }
    }

    fn is_strictly_positive(&self) -> bool {
        self.is_positive()
    }
}
