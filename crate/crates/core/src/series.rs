//! Truncated formal power series in `t` over an exact coefficient ring.
//!
//! A series carries its coefficients `c_0..c_M` and nothing else; the
//! truncation order `M` is `coeffs.len() - 1` and is explicit in every
//! result. Combining series of different orders silently truncates to the
//! smaller order — a finite certificate can never claim more than its
//! horizon. All arithmetic is exact.
//!
//! Reciprocal, log, exp and rational powers require the normalizations the
//! rest of the crate guarantees (unit constant term, or zero constant term
//! for `exp`); violations surface as [`SeriesError`] values, never as
//! silently wrong output.

use alloc::vec::Vec;
use core::fmt;

use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// Series truncated at an explicit order: coefficients of `t^0 .. t^M`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// Precondition failure on a series operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// reciprocal/log/pow need constant term exactly 1.
    ConstantTermNotOne,
    /// exp needs constant term exactly 0.
    ConstantTermNotZero,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ConstantTermNotOne => write!(f, "series constant term is not 1"),
            SeriesError::ConstantTermNotZero => write!(f, "series constant term is not 0"),
        }
    }
}

impl core::error::Error for SeriesError {}

impl<C: Ring> TruncatedSeries<C> {
    /// Builds a series of the given order, padding with zeros or truncating.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize_with(order + 1, C::zero);
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(alloc::vec![C::one()], order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(alloc::vec![c], order)
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^j`; panics past the truncation order.
    pub fn coeff(&self, j: usize) -> &C {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| self.coeffs[j].add(&rhs.coeffs[j]))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| self.coeffs[j].sub(&rhs.coeffs[j]))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(C::neg).collect() }
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for j in 0..=order {
            let mut acc = C::zero();
            for i in 0..=j {
                let a = &self.coeffs[i];
                let b = &rhs.coeffs[j - i];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            coeffs.push(acc);
        }
        TruncatedSeries { coeffs }
    }

    /// Coefficient-wise product with a ring element.
    pub fn scaled(&self, c: &C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.scale(k)).collect() }
    }

    /// Multiplication by `t^i`, keeping the order (top coefficients drop off).
    pub fn shifted(&self, i: usize) -> Self {
        let order = self.order();
        let mut coeffs = alloc::vec![C::zero(); order + 1];
        for j in i..=order {
            coeffs[j] = self.coeffs[j - i].clone();
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse of a series with constant term 1:
    /// `h_0 = 1`, `h_j = -sum_{i=1..j} a_i h_{j-i}`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let mut h: Vec<C> = Vec::with_capacity(order + 1);
        h.push(C::one());
        for j in 1..=order {
            let mut acc = C::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&h[j - i]));
                }
            }
            h.push(acc.neg());
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    /// Formal logarithm of a series with constant term 1, via
    /// `log(a) = integral of a'/a`; the constant term of the result is 0.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let u = self.derivative().mul(&self.reciprocal()?);
        Ok(u.antiderivative().truncated(self.order()))
    }

    /// Formal exponential of a series with constant term 0:
    /// `j h_j = sum_{i=1..j} i a_i h_{j-i}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero);
        }
        let order = self.order();
        let mut h: Vec<C> = Vec::with_capacity(order + 1);
        h.push(C::one());
        for j in 1..=order {
            let mut acc = C::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() {
                    let term = self.coeffs[i].mul(&h[j - i]).scale(&Rational::from(i as i64));
                    acc = acc.add(&term);
                }
            }
            h.push(acc.scale(&Rational::new(1, j as i64)));
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    /// Rational power `a^alpha` of a series with constant term 1, by the
    /// coefficient recurrence obtained from `a h' = alpha a' h`:
    /// `j h_j = sum_{i=1..j} ((alpha+1) i - j) a_i h_{j-i}`.
    ///
    /// Any rational exponent is allowed, negative included. For integer
    /// exponents the result agrees with repeated multiplication.
    pub fn pow(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        let order = self.order();
        let alpha_plus_1 = alpha + &Rational::one();
        let mut h: Vec<C> = Vec::with_capacity(order + 1);
        h.push(C::one());
        for j in 1..=order {
            let mut acc = C::zero();
            for i in 1..=j {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                let factor = &(&alpha_plus_1 * &Rational::from(i as i64))
                    - &Rational::from(j as i64);
                if factor.is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[i].mul(&h[j - i]).scale(&factor));
            }
            h.push(acc.scale(&Rational::new(1, j as i64)));
        }
        Ok(TruncatedSeries { coeffs: h })
    }

    /// Term-wise derivative; an order-`M` input is known to order `M - 1`.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&Rational::from(i as i64 + 1)))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Term-wise antiderivative with constant term 0; gains one order.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1, i as i64 + 1)));
        }
        TruncatedSeries { coeffs }
    }

    /// The sequence `s_1..s_M` with `f'/f = -sum s_j t^{j-1}`, for a series
    /// `f` with constant term 1. When `f = det(I - tA)` these are the power
    /// traces `trace(A^j)`.
    pub fn log_derivative_sums(&self) -> Result<Vec<C>, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne);
        }
        if self.order() == 0 {
            return Ok(Vec::new());
        }
        let u = self.derivative().mul(&self.reciprocal()?);
        Ok(u.coeffs.iter().map(C::neg).collect())
    }
}

impl TruncatedSeries<MultiPoly> {
    /// Exact specialization of every coefficient at a rational point.
    pub fn eval(&self, point: &[Rational]) -> TruncatedSeries<Rational> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.eval(point)).collect() }
    }

    /// True when the coefficient of `t^j` contains only weight-`j` monomials
    /// for every `j` — the grading every `X_n`-derived series satisfies.
    pub fn is_weight_graded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, c)| c.has_pure_weight(j as u32))
    }
}
