//! The structured matrix family `X_n` and everything computed from it.
//!
//! `X_n` carries `x_1..x_n` down its first column and along constant
//! diagonals, the integers `1..n-1` on the superdiagonal, and zeros above:
//!
//! ```text
//! x1  1
//! x2  x1  2
//! x3  x2  x1  3
//! ..  ..  ..  ..  ..
//! xn  ..  x3  x2  x1
//! ```
//!
//! Its reversed characteristic polynomial `f_n(t) = det(I - t X_n)` is
//! computed two independent ways: a banded recursion in `n` (production) and
//! a cofactor determinant over symbolic entries (oracle). Trace tables are
//! likewise computed by capped symbolic matrix powers and re-derived from the
//! logarithmic derivative of `f_n`; the two routes must agree exactly or the
//! computation aborts.
//!
//! The same first-column/constant-diagonal pattern built from normalized
//! traces `t_1..t_m` gives the matrix `T_m` whose determinant yields the
//! `t^m` coefficient of `1 - f_n^{1/n}`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::Matrix;
use crate::poly::MultiPoly;
use crate::positivity::{check_one_minus, PositivityVerdict};
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::TruncatedSeries;

/// Dimension or input-shape error on structured-matrix operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructError {
    /// The operation needs dimension at least this value.
    DimensionTooSmall { minimum: usize },
}

impl fmt::Display for StructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructError::DimensionTooSmall { minimum } => {
                write!(f, "dimension must be at least {minimum}")
            }
        }
    }
}

impl core::error::Error for StructError {}

/// Builds the first-column/constant-diagonal pattern from a sequence:
/// `seq` fills the first column downward and every diagonal below the main
/// one; the superdiagonal holds `1, 2, ..., len-1`; zeros above.
pub fn x_pattern<C: Ring>(seq: &[C]) -> Matrix<C> {
    let n = seq.len();
    Matrix::from_fn(n, |i, j| {
        if j == i + 1 {
            C::from_int(i as i64 + 1)
        } else if j <= i {
            seq[i - j].clone()
        } else {
            C::zero()
        }
    })
}

/// The matrix `X_n`, symbolic (`C = MultiPoly`) or specialized at a rational
/// point (`C = Rational`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructuredMatrix<C: Ring> {
    mat: Matrix<C>,
}

impl StructuredMatrix<MultiPoly> {
    /// `X_n` with symbolic entries `x_1..x_n`.
    pub fn symbolic(n: usize) -> Result<Self, StructError> {
        if n < 1 {
            return Err(StructError::DimensionTooSmall { minimum: 1 });
        }
        let vars: Vec<MultiPoly> = (1..=n).map(MultiPoly::var).collect();
        Ok(StructuredMatrix { mat: x_pattern(&vars) })
    }
}

impl StructuredMatrix<Rational> {
    /// `X_n` specialized at `x = point`.
    pub fn specialized(point: &[Rational]) -> Result<Self, StructError> {
        if point.is_empty() {
            return Err(StructError::DimensionTooSmall { minimum: 1 });
        }
        Ok(StructuredMatrix { mat: x_pattern(point) })
    }
}

impl<C: Ring> StructuredMatrix<C> {
    pub fn n(&self) -> usize {
        self.mat.n()
    }

    pub fn matrix(&self) -> &Matrix<C> {
        &self.mat
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, i: usize, j: usize) -> &C {
        self.mat.get(i, j)
    }
}

/// The family `f_0..f_n` of reversed characteristic series, to the given
/// truncation order, over any coefficient ring: `vars[i]` is the image of
/// `x_{i+1}`. Uses the last-row expansion recursion
/// `f_m = (1 - x_1 t) f_{m-1} - sum_{i=2..m} (m-1)!/(m-i)! x_i f_{m-i} t^i`.
pub fn char_series_family_in<C: Ring>(vars: &[C], order: usize) -> Vec<TruncatedSeries<C>> {
    let n = vars.len();
    let mut family: Vec<TruncatedSeries<C>> = Vec::with_capacity(n + 1);
    family.push(TruncatedSeries::one(order));
    for m in 1..=n {
        let linear = TruncatedSeries::new(alloc::vec![C::one(), vars[0].neg()], order);
        let mut f = linear.mul(&family[m - 1]);
        for i in 2..=m {
            let coef = Rational::falling_factorial(m as u64 - 1, i as u64 - 1);
            let term = family[m - i].scaled(&vars[i - 1].scale(&coef)).shifted(i);
            f = f.sub(&term);
        }
        family.push(f);
    }
    family
}

/// Symbolic `f_n(t) = det(I - t X_n)` to the given order, by recursion.
pub fn char_series(n: usize, order: usize) -> TruncatedSeries<MultiPoly> {
    char_series_family(n, order).pop().unwrap()
}

/// Symbolic family `f_0..f_n`, each to the given order.
pub fn char_series_family(n: usize, order: usize) -> Vec<TruncatedSeries<MultiPoly>> {
    let vars: Vec<MultiPoly> = (1..=n).map(MultiPoly::var).collect();
    char_series_family_in(&vars, order)
}

/// `f_n(t)` specialized at a rational point, to the given order.
pub fn char_series_at(point: &[Rational], order: usize) -> TruncatedSeries<Rational> {
    char_series_family_in(point, order).pop().unwrap()
}

/// Independent oracle for [`char_series`]: `det(I - t X_n)` by cofactor
/// expansion over dense degree-`n` polynomials in `t`. Exponential in `n`;
/// intended for `n <= 7`.
pub fn char_series_oracle(n: usize) -> TruncatedSeries<MultiPoly> {
    // dense univariate polynomials in t with MultiPoly coefficients
    type TPoly = Vec<MultiPoly>;

    fn tpoly_mul(a: &[MultiPoly], b: &[MultiPoly]) -> TPoly {
        let mut out = alloc::vec![MultiPoly::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ca.mul(cb));
            }
        }
        out
    }

    fn tpoly_acc(acc: &mut TPoly, term: &[MultiPoly], negate: bool) {
        if acc.len() < term.len() {
            acc.resize(term.len(), MultiPoly::zero());
        }
        for (k, c) in term.iter().enumerate() {
            acc[k] = if negate { acc[k].sub(c) } else { acc[k].add(c) };
        }
    }

    fn det(m: &[Vec<TPoly>]) -> TPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc: TPoly = alloc::vec![MultiPoly::zero()];
        for r in 0..n {
            if m[r][0].iter().all(MultiPoly::is_zero) {
                continue;
            }
            let minor: Vec<Vec<TPoly>> = (0..n - 1)
                .map(|i| {
                    let row = if i < r { i } else { i + 1 };
                    m[row][1..].to_vec()
                })
                .collect();
            let term = tpoly_mul(&m[r][0], &det(&minor));
            tpoly_acc(&mut acc, &term, r % 2 == 1);
        }
        acc
    }

    assert!(n >= 1, "oracle needs n >= 1");
    let x = StructuredMatrix::symbolic(n).unwrap();
    let entries: Vec<Vec<TPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c0 = if i == j { MultiPoly::one() } else { MultiPoly::zero() };
                    alloc::vec![c0, x.entry(i, j).neg()]
                })
                .collect()
        })
        .collect();
    TruncatedSeries::new(det(&entries), n)
}

/// Ascending coefficients of `F(x) = det(xI - X)` read off a reversed
/// characteristic series of degree `n`: `F` coefficient of `x^k` is the
/// `t^{n-k}` coefficient of `f`.
pub fn charpoly_from_series<C: Ring>(f: &TruncatedSeries<C>, n: usize) -> Vec<C> {
    assert!(f.order() >= n, "series order too small for degree {n}");
    (0..=n).map(|k| f.coeff(n - k).clone()).collect()
}

/// Ascending coefficients of the symbolic `F_n(x) = det(xI - X_n)`.
pub fn charpoly(n: usize) -> Vec<MultiPoly> {
    charpoly_from_series(&char_series(n, n), n)
}

/// Power traces of `X_n`: `s_k = trace(X_n^k)` and the normalized
/// `t_k = s_k / n`, for `k = 1..=k_max`.
///
/// Construction computes the traces twice — by weight-capped symbolic matrix
/// powers and through the logarithmic derivative of `f_n` — and panics if
/// the routes disagree, since that can only mean an implementation bug.
#[derive(Clone, Debug)]
pub struct TraceTable {
    n: usize,
    s: Vec<MultiPoly>,
    t: Vec<MultiPoly>,
}

impl TraceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.s.len()
    }

    /// `s_k = trace(X_n^k)`, 1-based.
    pub fn s(&self, k: usize) -> &MultiPoly {
        &self.s[k - 1]
    }

    /// `t_k = s_k / n`, 1-based.
    pub fn t(&self, k: usize) -> &MultiPoly {
        &self.t[k - 1]
    }

    pub fn t_slice(&self) -> &[MultiPoly] {
        &self.t
    }
}

pub fn trace_table(n: usize, k_max: usize) -> Result<TraceTable, StructError> {
    if n < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 });
    }
    let x = StructuredMatrix::symbolic(n)?;
    let cap = Some(k_max as u32);
    let mut s_matrix = Vec::with_capacity(k_max);
    let mut power = x.matrix().clone();
    for _ in 0..k_max {
        s_matrix.push(power.trace());
        if s_matrix.len() < k_max {
            power = power.mul_capped(x.matrix(), cap);
        }
    }

    let f = char_series(n, k_max);
    let s_series = f.log_derivative_sums().expect("f_n has constant term 1");
    assert_eq!(
        s_matrix, s_series,
        "trace routes disagree for n = {n}: matrix powers vs log-derivative of f_n"
    );

    let inv_n = Rational::new(1, n as i64);
    let t = s_matrix.iter().map(|s| s.scale(&inv_n)).collect();
    Ok(TraceTable { n, s: s_matrix, t })
}

/// Outcome of an exact symbolic identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub context: String,
    /// Largest index the identity was checked at.
    pub checked_upto: usize,
    pub passed: bool,
    /// First index where the identity failed, if any.
    pub first_failure: Option<usize>,
}

/// Checks `(X_n^k)_{nn} = t_k(n)` symbolically for `k = 0..=k_max`; by
/// linearity this makes the last standard basis vector a trace vector of
/// `X_n` for every polynomial up to that degree.
pub fn trace_vector_check(n: usize, k_max: usize) -> Result<IdentityReport, StructError> {
    let x = StructuredMatrix::symbolic(n)?;
    let table = trace_table(n, k_max)?;
    let cap = Some(k_max as u32);
    let mut power = Matrix::identity(n);
    let mut first_failure = None;
    for k in 0..=k_max {
        let corner = power.get(n - 1, n - 1);
        let expected = if k == 0 { MultiPoly::one() } else { table.t(k).clone() };
        if *corner != expected {
            first_failure = Some(k);
            break;
        }
        if k < k_max {
            power = power.mul_capped(x.matrix(), cap);
        }
    }
    Ok(IdentityReport {
        context: format!("(X_{n}^k) corner entry equals t_k({n}), k = 0..{k_max}"),
        checked_upto: k_max,
        passed: first_failure.is_none(),
        first_failure,
    })
}

/// Checks `d/dx F_n(x) = n F_{n-1}(x)` by exact coefficient comparison.
pub fn derivative_identity_check(n: usize) -> Result<IdentityReport, StructError> {
    if n < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 });
    }
    let fn_coeffs = charpoly(n);
    let fnm1_coeffs = charpoly(n - 1);
    let n_scalar = Rational::from(n as i64);
    let mut first_failure = None;
    for k in 0..n {
        let derivative = fn_coeffs[k + 1].scale(&Rational::from(k as i64 + 1));
        let expected = fnm1_coeffs[k].scale(&n_scalar);
        if derivative != expected {
            first_failure = Some(k);
            break;
        }
    }
    Ok(IdentityReport {
        context: format!("d/dx F_{n}(x) = {n} F_{}(x)", n - 1),
        checked_upto: n,
        passed: first_failure.is_none(),
        first_failure,
    })
}

/// The matrix `T_m` built from the normalized traces `t_1(n)..t_m(n)` in the
/// `X` pattern.
pub fn t_matrix(n: usize, m: usize) -> Result<Matrix<MultiPoly>, StructError> {
    if m < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 });
    }
    let table = trace_table(n, m)?;
    Ok(x_pattern(&table.t_slice()[..m]))
}

/// The `t^m` coefficient of `1 - f_n(t)^{1/n}` by the determinant route:
/// `gamma_m(n) = (-1)^{m-1} det(T_m(n)) / m!`.
pub fn gamma_via_determinant(n: usize, m: usize) -> Result<MultiPoly, StructError> {
    let det = t_matrix(n, m)?.det_bareiss();
    let mut factor = Rational::factorial(m as u64).recip().unwrap();
    if m % 2 == 0 {
        factor = -factor;
    }
    Ok(det.scale(&factor))
}

/// Outcome of the coefficient-scaling identity check: specializing `X_n` at
/// the power sums of the roots of `q(x) = x^n + q_1 x^{n-1} + ... + q_n`
/// must give `det(xI - X_n) = x^n + n q_1 x^{n-1} + n(n-1) q_2 x^{n-2} + ...
/// + n! q_n`.
#[derive(Clone, Debug)]
pub struct ScalingReport {
    pub n: usize,
    /// Power sums of the roots of `q`, obtained from its coefficients alone.
    pub power_sums: Vec<Rational>,
    /// Ascending coefficients of the computed `det(xI - X_n)`.
    pub charpoly: Vec<Rational>,
    /// Ascending coefficients of the scaled target polynomial.
    pub expected: Vec<Rational>,
    pub passed: bool,
}

/// Runs the scaling check for `q` given as the tail `[q_1, ..., q_n]` of a
/// monic polynomial, descending powers. No root extraction happens: the
/// power sums come from the logarithmic derivative of the reversal of `q`.
pub fn scaled_charpoly_check(q_tail: &[Rational]) -> Result<ScalingReport, StructError> {
    let n = q_tail.len();
    if n < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 });
    }
    // reversal: t^n q(1/t) = 1 + q_1 t + ... + q_n t^n
    let mut rev = Vec::with_capacity(n + 1);
    rev.push(Rational::one());
    rev.extend(q_tail.iter().cloned());
    let f_q = TruncatedSeries::new(rev, n);
    let power_sums = f_q.log_derivative_sums().expect("constant term 1");

    let f_x = char_series_at(&power_sums, n);
    let charpoly = charpoly_from_series(&f_x, n);

    let mut expected = alloc::vec![Rational::zero(); n + 1];
    expected[n] = Rational::one();
    for i in 1..=n {
        expected[n - i] = &q_tail[i - 1] * &Rational::falling_factorial(n as u64, i as u64);
    }

    let passed = charpoly == expected;
    Ok(ScalingReport { n, power_sums, charpoly, expected, passed })
}

/// Outcome of the three checks on the specialization `x = (0, 1, 0, ..., 0)`
/// (the matrix `X_{n,2}`): its reversed characteristic polynomial is even in
/// `t`, it is symmetrizable by an explicit rational diagonal congruence, and
/// `1 - f_{n,2}^{1/floor(n/2)}` is coefficient-nonnegative to the given
/// order.
#[derive(Clone, Debug)]
pub struct Xn2Report {
    pub n: usize,
    pub order: usize,
    pub odd_coefficients_vanish: bool,
    pub first_odd_violation: Option<usize>,
    /// `D^2 X^T = X D^2` with `D^2 = diag(1, 1, 1/2!, ..., 1/(n-1)!)`, the
    /// rational form of similarity to a symmetric matrix.
    pub symmetry_identity_holds: bool,
    pub first_symmetry_violation: Option<(usize, usize)>,
    pub root_verdict: PositivityVerdict,
}

impl Xn2Report {
    pub fn passed(&self) -> bool {
        self.odd_coefficients_vanish
            && self.symmetry_identity_holds
            && !self.root_verdict.is_violated()
    }
}

pub fn xn2_report(n: usize, order: usize) -> Result<Xn2Report, StructError> {
    if n < 2 {
        return Err(StructError::DimensionTooSmall { minimum: 2 });
    }
    let mut point = alloc::vec![Rational::zero(); n];
    point[1] = Rational::one();

    let order_eff = order.max(n);
    let f = char_series_at(&point, order_eff);

    let mut first_odd_violation = None;
    for j in (1..=order_eff).step_by(2) {
        if !f.coeff(j).is_zero() {
            first_odd_violation = Some(j);
            break;
        }
    }

    let x = StructuredMatrix::specialized(&point)?;
    let d: Vec<Rational> = (0..n)
        .map(|i| Rational::factorial(i as u64).recip().unwrap())
        .collect();
    let mut first_symmetry_violation = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = &d[i] * x.entry(j, i);
            let rhs = x.entry(i, j) * &d[j];
            if lhs != rhs {
                first_symmetry_violation = Some((i + 1, j + 1));
                break 'outer;
            }
        }
    }

    let root_exponent = n / 2;
    let h = f
        .truncated(order)
        .pow(&Rational::new(1, root_exponent as i64))
        .expect("f_{n,2} has constant term 1");
    let root_verdict = check_one_minus(
        &h,
        root_exponent == 1,
        format!("1 - f_{{{n},2}}(t)^{{1/{root_exponent}}}"),
    );

    Ok(Xn2Report {
        n,
        order,
        odd_coefficients_vanish: first_odd_violation.is_none(),
        first_odd_violation,
        symmetry_identity_holds: first_symmetry_violation.is_none(),
        first_symmetry_violation,
        root_verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;
    use alloc::string::ToString;
    use alloc::vec;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(i)
    }

    #[test]
    fn xn_entries() {
        let x1 = StructuredMatrix::symbolic(1).unwrap();
        assert_eq!(x1.entry(0, 0), &x(1));

        let x2 = StructuredMatrix::symbolic(2).unwrap();
        assert_eq!(x2.entry(0, 0), &x(1));
        assert_eq!(x2.entry(0, 1), &MultiPoly::one());
        assert_eq!(x2.entry(1, 0), &x(2));
        assert_eq!(x2.entry(1, 1), &x(1));

        // X_3 specialized at (0, 1, 0) is the matrix X_{3,2}
        let m = StructuredMatrix::specialized(&[r(0), r(1), r(0)]).unwrap();
        let rows: Vec<Vec<i64>> = vec![vec![0, 1, 0], vec![1, 0, 2], vec![0, 1, 0]];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), &r(rows[i][j]));
            }
        }

        assert_eq!(
            StructuredMatrix::symbolic(0),
            Err(StructError::DimensionTooSmall { minimum: 1 })
        );
    }

    #[test]
    fn deleting_last_row_and_column_gives_previous_matrix() {
        let x5 = StructuredMatrix::symbolic(5).unwrap();
        let x4 = StructuredMatrix::symbolic(4).unwrap();
        assert_eq!(x5.matrix().principal_submatrix(), *x4.matrix());
    }

    #[test]
    fn f1_and_f2() {
        let f1 = char_series(1, 1);
        assert_eq!(f1.coeffs(), &[MultiPoly::one(), x(1).neg()]);

        let f2 = char_series(2, 2);
        assert_eq!(f2.coeff(0), &MultiPoly::one());
        assert_eq!(f2.coeff(1), &x(1).scale(&r(-2)));
        assert_eq!(f2.coeff(2), &poly(2, &[(r(1), &[2]), (r(-1), &[0, 1])]));
        assert_eq!(f2.coeff(2).to_string(), "x1^2 - x2");
    }

    #[test]
    fn recursion_matches_oracle_small() {
        for n in 1..=4 {
            assert_eq!(char_series(n, n), char_series_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn linear_coefficient_is_minus_n_x1() {
        for n in 1..=6 {
            assert_eq!(char_series(n, n).coeff(1), &x(1).scale(&r(-(n as i64))));
        }
    }

    #[test]
    fn charpoly_reversal() {
        // F_1 = x - x1
        assert_eq!(charpoly(1), vec![x(1).neg(), MultiPoly::one()]);
        // F_2 = x^2 - 2 x1 x + (x1^2 - x2)
        let f2 = charpoly(2);
        assert_eq!(f2[2], MultiPoly::one());
        assert_eq!(f2[1], x(1).scale(&r(-2)));
        assert_eq!(f2[0], poly(2, &[(r(1), &[2]), (r(-1), &[0, 1])]));
        // reversal consistency for n = 3
        let f = char_series(3, 3);
        let p = charpoly(3);
        for k in 0..=3 {
            assert_eq!(&p[k], f.coeff(3 - k));
        }
    }

    #[test]
    fn trace_table_values() {
        for n in 1..=4 {
            let table = trace_table(n, 3).unwrap();
            assert_eq!(table.s(1), &x(1).scale(&r(n as i64)), "s_1 = n x1");
        }
        let table = trace_table(2, 2).unwrap();
        assert_eq!(table.s(2), &poly(2, &[(r(2), &[2]), (r(2), &[0, 1])]));
        // t_2(2) - t_2(1) = x2
        let t21 = trace_table(1, 2).unwrap();
        assert_eq!(table.t(2).sub(t21.t(2)), x(2));
    }

    #[test]
    fn trace_vector_identity() {
        for n in 1..=3 {
            let report = trace_vector_check(n, 5).unwrap();
            assert!(report.passed, "{report:?}");
        }
        // n = 2, k = 2 by hand: (X_2^2)_{22} = x1^2 + x2 = t_2(2)
        let x2 = StructuredMatrix::symbolic(2).unwrap();
        let sq = x2.matrix().mul(x2.matrix());
        assert_eq!(sq.get(1, 1), &poly(2, &[(r(1), &[2]), (r(1), &[0, 1])]));
    }

    #[test]
    fn derivative_identity() {
        for n in 1..=5 {
            let report = derivative_identity_check(n).unwrap();
            assert!(report.passed, "{report:?}");
        }
    }

    #[test]
    fn gamma_determinant_small_cases() {
        // gamma_1 = t_1 = x1
        assert_eq!(gamma_via_determinant(3, 1).unwrap(), x(1));
        // gamma_2(2) = (t_2 - t_1^2)/2 = x2/2
        assert_eq!(
            gamma_via_determinant(2, 2).unwrap(),
            x(2).scale(&Rational::new(1, 2))
        );
    }

    #[test]
    fn gamma_determinant_matches_series_route() {
        let n = 3;
        let order = 5;
        let f = char_series(n, order);
        let h = f.pow(&Rational::new(1, n as i64)).unwrap();
        for m in 1..=order {
            let gamma = gamma_via_determinant(n, m).unwrap();
            assert_eq!(gamma, h.coeff(m).neg(), "m = {m}");
        }
    }

    #[test]
    fn scaling_identity_hand_cases() {
        // q(x) = x - 1
        let report = scaled_charpoly_check(&[r(-1)]).unwrap();
        assert!(report.passed);
        assert_eq!(report.power_sums, vec![r(1)]);
        assert_eq!(report.charpoly, vec![r(-1), r(1)]);

        // q(x) = (x-1)^2 = x^2 - 2x + 1: power sums (2, 2),
        // det(xI - X_2) = x^2 - 4x + 2
        let report = scaled_charpoly_check(&[r(-2), r(1)]).unwrap();
        assert!(report.passed);
        assert_eq!(report.power_sums, vec![r(2), r(2)]);
        assert_eq!(report.charpoly, vec![r(2), r(-4), r(1)]);

        // q(x) = x^2 - x: roots {1, 0}, det(xI - X_2) = x^2 - 2x
        let report = scaled_charpoly_check(&[r(-1), r(0)]).unwrap();
        assert!(report.passed);
        assert_eq!(report.power_sums, vec![r(1), r(1)]);
        assert_eq!(report.charpoly, vec![r(0), r(-2), r(1)]);
    }

    #[test]
    fn xn2_small_cases() {
        // n = 2: f_{2,2} = 1 - t^2, root exponent 1, 1 - f = t^2
        let report = xn2_report(2, 8).unwrap();
        assert!(report.passed(), "{report:?}");

        // n = 3: f_{3,2} = 1 - 3 t^2
        let f = char_series_at(&[r(0), r(1), r(0)], 3);
        assert_eq!(f.coeffs()[..3], [r(1), r(0), r(-3)]);
        let report = xn2_report(3, 8).unwrap();
        assert!(report.passed(), "{report:?}");

        assert_eq!(
            xn2_report(1, 8).unwrap_err(),
            StructError::DimensionTooSmall { minimum: 2 }
        );
    }
}
