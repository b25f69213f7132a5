//! Dense square matrices over a coefficient ring, with exact determinants.
//!
//! Two determinant routes are kept deliberately: fraction-free Bareiss
//! elimination (production, `O(n^3)` ring operations with exact divisions)
//! and recursive cofactor expansion (the small-`n` oracle the Bareiss path
//! is tested against).

use alloc::vec::Vec;

use crate::ring::Ring;

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<C> {
    n: usize,
    entries: Vec<C>,
}

impl<C: Ring> Matrix<C> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { C::one() } else { C::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.n + j]
    }

    /// Matrix product; `cap` bounds the monomial weight kept in every entry
    /// product (see [`Ring::mul_capped`]).
    pub fn mul_capped(&self, rhs: &Self, cap: Option<u32>) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Self::from_fn(self.n, |i, j| {
            let mut acc = C::zero();
            for k in 0..self.n {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul_capped(b, cap));
                }
            }
            acc
        })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.mul_capped(rhs, None)
    }

    pub fn trace(&self) -> C {
        let mut acc = C::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Deletes the last row and column; requires `n >= 2`.
    pub fn principal_submatrix(&self) -> Self {
        assert!(self.n >= 2);
        Self::from_fn(self.n - 1, |i, j| self.get(i, j).clone())
    }

    /// Determinant by recursive cofactor expansion along the first column.
    /// Exponential cost; intended as an oracle for small matrices.
    pub fn det_cofactor(&self) -> C {
        match self.n {
            0 => C::one(),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut acc = C::zero();
                for r in 0..self.n {
                    let c = self.get(r, 0);
                    if c.is_zero() {
                        continue;
                    }
                    let minor = Matrix::from_fn(self.n - 1, |i, j| {
                        let row = if i < r { i } else { i + 1 };
                        self.get(row, j + 1).clone()
                    });
                    let term = c.mul(&minor.det_cofactor());
                    acc = if r % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division is
    /// exact by the Sylvester determinant identity; an inexact one would be
    /// an implementation bug and panics.
    pub fn det_bareiss(&self) -> C {
        if self.n == 0 {
            return C::one();
        }
        let mut a = self.entries.clone();
        let n = self.n;
        let at = |a: &Vec<C>, i: usize, j: usize| -> C { a[i * n + j].clone() };
        let mut negate = false;
        let mut prev = C::one();
        for k in 0..n - 1 {
            if at(&a, k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !at(&a, r, k).is_zero()) else {
                    return C::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                negate = !negate;
            }
            let pivot = at(&a, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.mul(&at(&a, i, j)).sub(&at(&a, i, k).mul(&at(&a, k, j)));
                    a[i * n + j] = num
                        .exact_div(&prev)
                        .expect("fraction-free elimination: inexact division");
                }
                a[i * n + k] = C::zero();
            }
            prev = pivot;
        }
        let det = at(&a, n - 1, n - 1);
        if negate {
            det.neg()
        } else {
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiPoly;
    use crate::rational::Rational;

    fn rmat(n: usize, vals: &[i64]) -> Matrix<Rational> {
        Matrix::from_fn(n, |i, j| Rational::from(vals[i * n + j]))
    }

    #[test]
    fn determinants_agree_on_rationals() {
        let m = rmat(3, &[2, 1, 0, 1, 3, 2, 0, 1, 4]);
        assert_eq!(m.det_cofactor(), Rational::from(16));
        assert_eq!(m.det_bareiss(), Rational::from(16));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = rmat(3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(m.det_bareiss(), Rational::from(-1));
        assert_eq!(m.det_cofactor(), Rational::from(-1));

        let singular = rmat(2, &[0, 0, 1, 1]);
        assert_eq!(singular.det_bareiss(), Rational::zero());
    }

    #[test]
    fn symbolic_determinant() {
        // det [[x1, 1], [x2, x1]] = x1^2 - x2
        let x = |i| MultiPoly::var(i);
        let m = Matrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => x(1),
            (0, 1) => MultiPoly::one(),
            _ => x(2),
        });
        let expected = x(1).mul(&x(1)).sub(&x(2));
        assert_eq!(m.det_cofactor(), expected);
        assert_eq!(m.det_bareiss(), expected);
    }

    #[test]
    fn trace_and_submatrix() {
        let m = rmat(3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.trace(), Rational::from(15));
        let sub = m.principal_submatrix();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.get(1, 1), &Rational::from(5));
    }
}
