//! Sparse multivariate polynomials over [`Rational`] with a weighted grading.
//!
//! Variables are written `x1, x2, ...` and `x_j` carries weight `j`, so the
//! monomial `x1^a1 * ... * xn^an` has weight `a1 + 2 a2 + ... + n an`. The
//! weight is the degree that matters here: in every series derived from the
//! structured matrices, the coefficient of `t^j` is a pure weight-`j`
//! polynomial, and products can soundly drop terms above a weight cap when
//! the caller only consumes bounded weights.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector under the graded
//! lexicographic order (weight first, then exponents), which makes term
//! iteration, printing and negative-term scans deterministic.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;
use crate::ring::{Ring, TermSigns};

/// Exponent tuple `(a1, ..., an)` of a monomial, canonicalized so that
/// trailing zero exponents are dropped; equal monomials compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exps: Vec<u32>,
    weight: u32,
}

impl ExponentVector {
    /// The unit monomial (all exponents zero).
    pub fn unit() -> Self {
        ExponentVector { exps: Vec::new(), weight: 0 }
    }

    /// The monomial `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut exps = alloc::vec![0; i];
        exps[i - 1] = 1;
        Self::from_exponents(exps)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let weight = exps
            .iter()
            .enumerate()
            .map(|(j, &a)| (j as u32 + 1) * a)
            .sum();
        ExponentVector { exps, weight }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Weight `a1 + 2 a2 + ... + n an`.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Index of the highest variable with nonzero exponent (0 for the unit).
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Monomial product: exponent-wise sum.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.exps.len().max(rhs.exps.len());
        let mut exps = alloc::vec![0u32; n];
        for (j, &a) in self.exps.iter().enumerate() {
            exps[j] += a;
        }
        for (j, &a) in rhs.exps.iter().enumerate() {
            exps[j] += a;
        }
        // never creates trailing zeros beyond max(len), but lengths may differ
        Self::from_exponents(exps)
    }

    /// Monomial quotient `self / rhs`, or `None` if some exponent would go
    /// negative.
    pub fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (j, &a) in rhs.exps.iter().enumerate() {
            exps[j] = exps[j].checked_sub(a)?;
        }
        Some(Self::from_exponents(exps))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        // graded lex: weight first, then exponents left to right. With
        // trailing zeros stripped, slice comparison agrees with comparing
        // zero-extended tuples.
        self.weight
            .cmp(&other.weight)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (j, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if a == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, a)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial in `x1..xn` over [`Rational`].
///
/// Stored coefficients are never zero; the zero polynomial has an empty term
/// map. Polynomials built in contexts with different variable counts combine
/// freely — exponent vectors are zero-extended implicitly, and the variable
/// count is simply the highest variable actually present.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::unit(), c);
        }
        MultiPoly { terms }
    }

    /// The variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(ExponentVector::var(i), Rational::one());
        MultiPoly { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Index of the highest variable with nonzero exponent anywhere.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(ExponentVector::nvars).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &ExponentVector) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest monomial weight present (0 for the zero polynomial).
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.weight())
    }

    /// True when every term has weight exactly `w` (vacuously for zero).
    pub fn has_pure_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    fn add_term(&mut self, m: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.nvars());
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            nvars: self.nvars,
        }
    }

    /// Exact product. With `weight_cap = Some(w)` every product term of
    /// weight above `w` is discarded; sound whenever the caller only reads
    /// weights `<= w` out of downstream results, because weights only grow
    /// under multiplication.
    pub fn mul_capped(&self, rhs: &Self, weight_cap: Option<u32>) -> Self {
        let mut out = MultiPoly {
            terms: BTreeMap::new(),
            nvars: self.nvars.max(rhs.nvars),
        };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if let Some(cap) = weight_cap {
                    if m1.weight() + m2.weight() > cap {
                        continue;
                    }
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_capped(rhs, None)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return MultiPoly { terms: BTreeMap::new(), nvars: self.nvars };
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
            nvars: self.nvars,
        }
    }

    /// Terms with negative coefficient, ascending graded-lex; empty iff the
    /// polynomial has only nonnegative coefficients.
    pub fn negative_terms(&self) -> Vec<(ExponentVector, Rational)> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Exact substitution; `point[j]` is the value of `x_{j+1}`.
    /// Panics if fewer values than variables are supplied.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert!(
            point.len() >= self.nvars,
            "evaluation point has {} coordinates, polynomial uses {} variables",
            point.len(),
            self.nvars
        );
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (j, &a) in m.exponents().iter().enumerate() {
                if a > 0 {
                    term = &term * &point[j].pow(a);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Exact division in the polynomial ring; `None` when `rhs` is zero or
    /// does not divide `self`. Runs the graded-lex division algorithm, which
    /// terminates because leading monomials strictly decrease.
    pub fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (lead_m, lead_c) = rhs.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            let qm = rm.try_div(lead_m)?;
            let qc = rc.exact_div(lead_c).unwrap();
            for (m, c) in &rhs.terms {
                rem.add_term(qm.mul(m), -&(&qc * c));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl fmt::Display for MultiPoly {
    /// Renders terms in descending graded-lex order, e.g. `x1^2 - 2*x2`,
    /// with rational coefficients in the `p/q` text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if m.is_unit() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        MultiPoly::sub(self, rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }

    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }

    fn scale(&self, k: &Rational) -> Self {
        MultiPoly::scale(self, k)
    }

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        MultiPoly::exact_div(self, rhs)
    }

    fn from_int(k: i64) -> Self {
        MultiPoly::constant(Rational::from(k))
    }

    fn mul_capped(&self, rhs: &Self, cap: Option<u32>) -> Self {
        MultiPoly::mul_capped(self, rhs, cap)
    }
}

impl TermSigns for MultiPoly {
    fn negative_terms(&self) -> Vec<(ExponentVector, Rational)> {
        MultiPoly::negative_terms(self)
    }

    fn is_strictly_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }
}

/// Convenience used across tests and reports: `[(coef, exponents)]` literal.
pub fn poly(nvars: usize, terms: &[(Rational, &[u32])]) -> MultiPoly {
    MultiPoly::from_terms(
        nvars,
        terms
            .iter()
            .map(|(c, e)| (ExponentVector::from_exponents(e.to_vec()), c.clone())),
    )
}
