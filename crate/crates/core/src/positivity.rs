//! Monomial-positivity certification and spectrum diagnostics.
//!
//! A series with polynomial coefficients is *monomially positive* when every
//! coefficient of every `t`-power, viewed as a polynomial in `x_1..x_n`, has
//! only nonnegative monomial coefficients. Checks here return a
//! [`PositivityVerdict`] — an explicitly one-sided certificate carrying the
//! order it was checked to, plus the first offending term when one exists,
//! so violations can be re-verified independently.
//!
//! The scalar half of the module works on an eigenvalue list or on the
//! coefficients of `f(t) = prod (1 - lambda_i t)` directly: power sums with
//! no root extraction, minimal-`N` search for nonnegativity of
//! `1 - f(t)^{1/N}`, necessary-condition diagnostics (power-sum signs and
//! the `n^{k-1} s_{km} >= s_m^k` inequalities), and an incremental search
//! for a realization by a nonnegative structured matrix with zeros appended
//! to the spectrum.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::poly::{ExponentVector, MultiPoly};
use crate::rational::Rational;
use crate::ring::{Ring, TermSigns};
use crate::series::{SeriesError, TruncatedSeries};
use crate::structmat::{
    char_series_at, char_series_family, charpoly_from_series, trace_table, StructError,
};

/// Outcome of a positivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    /// No negative coefficient up to `certified_order`; says nothing beyond.
    CertifiedNonnegToOrder,
    /// A negative coefficient was found; see the attached [`Violation`].
    Violated,
    /// The checked object is a polynomial that was scanned in full.
    CertifiedExact,
}

/// The first offending term of a violated check, re-checkable against an
/// independent recomputation of the object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending coefficient (`t`-power for series scans,
    /// trace depth `k` for trace-difference scans).
    pub t_power: usize,
    /// Offending monomial, graded-lex-first; the unit monomial for scalars.
    pub monomial: ExponentVector,
    pub coefficient: Rational,
}

/// One-sided positivity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityVerdict {
    pub status: VerdictStatus,
    /// Horizon of the claim. For violated verdicts, the last index that was
    /// clean before the violation.
    pub certified_order: usize,
    pub violation: Option<Violation>,
    /// Whether every checked coefficient was strictly positive (scalars) or
    /// nonzero with positive terms (polynomials). Stricter than the
    /// nonnegativity the status certifies; reported separately because the
    /// two notions genuinely differ at finite order.
    pub all_strictly_positive: bool,
    /// Human-readable provenance of the checked object.
    pub context: String,
}

impl PositivityVerdict {
    pub fn is_violated(&self) -> bool {
        self.status == VerdictStatus::Violated
    }

    pub fn is_certified(&self) -> bool {
        !self.is_violated()
    }
}

/// Module error: invalid dimensions, malformed spectra, or series
/// precondition failures bubbled up from the underlying operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PositivityError {
    Struct(StructError),
    Series(SeriesError),
    /// `f_k / f_n` needs `k < n`.
    InvalidQuotient { n: usize, k: usize },
    /// Root index `N` must be at least 1.
    RootIndexZero,
    EmptySpectrum,
    /// Coefficient form requires constant coefficient exactly 1.
    ConstantCoefficientNotOne,
    /// Complex entries must come in conjugate pairs with equal multiplicity.
    NotConjugateClosed,
}

impl fmt::Display for PositivityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositivityError::Struct(e) => write!(f, "{e}"),
            PositivityError::Series(e) => write!(f, "{e}"),
            PositivityError::InvalidQuotient { n, k } => {
                write!(f, "quotient f_k/f_n needs k < n, got k = {k}, n = {n}")
            }
            PositivityError::RootIndexZero => write!(f, "root index N must be at least 1"),
            PositivityError::EmptySpectrum => write!(f, "spectrum input is empty"),
            PositivityError::ConstantCoefficientNotOne => {
                write!(f, "coefficient list must start with constant coefficient 1")
            }
            PositivityError::NotConjugateClosed => {
                write!(f, "complex entries must be closed under conjugation")
            }
        }
    }
}

impl core::error::Error for PositivityError {}

impl From<StructError> for PositivityError {
    fn from(e: StructError) -> Self {
        PositivityError::Struct(e)
    }
}

impl From<SeriesError> for PositivityError {
    fn from(e: SeriesError) -> Self {
        PositivityError::Series(e)
    }
}

fn scan_terms<'a, C, I>(items: I, order: usize, exact: bool, context: String) -> PositivityVerdict
where
    C: Ring + TermSigns + 'a,
    I: Iterator<Item = (usize, &'a C)>,
{
    let mut strict = true;
    for (index, value) in items {
        let negatives = value.negative_terms();
        if let Some((monomial, coefficient)) = negatives.into_iter().next() {
            return PositivityVerdict {
                status: VerdictStatus::Violated,
                certified_order: index.saturating_sub(1),
                violation: Some(Violation { t_power: index, monomial, coefficient }),
                all_strictly_positive: false,
                context,
            };
        }
        if !value.is_strictly_positive() {
            strict = false;
        }
    }
    PositivityVerdict {
        status: if exact {
            VerdictStatus::CertifiedExact
        } else {
            VerdictStatus::CertifiedNonnegToOrder
        },
        certified_order: order,
        violation: None,
        all_strictly_positive: strict,
        context,
    }
}

/// Scans every coefficient of the series itself for negative terms.
/// Pass `exact = true` only when the caller knows the object is a polynomial
/// scanned in full, not a truncation.
pub fn check_nonneg<C: Ring + TermSigns>(
    series: &TruncatedSeries<C>,
    exact: bool,
    context: String,
) -> PositivityVerdict {
    scan_terms(
        series.coeffs().iter().enumerate(),
        series.order(),
        exact,
        context,
    )
}

/// For a series `h = 1 - sum gamma_j t^j`, checks that every `gamma_j` is
/// free of negative terms; the constant term must be exactly 1.
pub fn check_one_minus<C: Ring + TermSigns>(
    h: &TruncatedSeries<C>,
    exact: bool,
    context: String,
) -> PositivityVerdict {
    assert!(h.coeff(0).is_one(), "check_one_minus needs constant term 1");
    let gammas: Vec<C> = h.coeffs()[1..].iter().map(C::neg).collect();
    scan_terms(
        gammas.iter().enumerate().map(|(i, c)| (i + 1, c)),
        h.order(),
        exact,
        context,
    )
}

/// Certificate for the headline positivity statement on `X_n`: the verdict
/// for `1 - f_n(t)^{1/n}` plus the coefficients `gamma_1..gamma_order`
/// themselves (`gamma_1 = x_1` always).
#[derive(Clone, Debug)]
pub struct MainCertificate {
    pub verdict: PositivityVerdict,
    pub gammas: Vec<MultiPoly>,
}

/// Checks that `1 - f_n(t)^{1/n}` is monomially positive to the given order.
pub fn verify_main(n: usize, order: usize) -> Result<MainCertificate, PositivityError> {
    if n < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 }.into());
    }
    let f = crate::structmat::char_series(n, order);
    let h = f.pow(&Rational::new(1, n as i64))?;
    let gammas: Vec<MultiPoly> = h.coeffs()[1..].iter().map(MultiPoly::neg).collect();
    let verdict = check_one_minus(&h, n == 1, format!("1 - f_{n}(t)^{{1/{n}}}"));
    Ok(MainCertificate { verdict, gammas })
}

/// Specializes `x = (1, 0, ..., 0)`, so `f_n = (1 - t)^n`, and checks
/// `1 - f_n^{1/N}`: violated for every `N < n`, certified for `N >= n`.
pub fn verify_root_lower_bound(
    n: usize,
    root: u32,
    order: usize,
) -> Result<PositivityVerdict, PositivityError> {
    if n < 1 {
        return Err(StructError::DimensionTooSmall { minimum: 1 }.into());
    }
    if root == 0 {
        return Err(PositivityError::RootIndexZero);
    }
    let mut point = alloc::vec![Rational::zero(); n];
    point[0] = Rational::one();
    let f = char_series_at(&point, order);
    let h = f.pow(&Rational::new(1, root as i64))?;
    let exact = n % (root as usize) == 0;
    Ok(check_one_minus(
        &h,
        exact,
        format!("1 - (1-t)^{{{n}/{root}}}"),
    ))
}

/// Which quotient object to certify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// `f_{n-1}(t) / f_n(t)`
    Adjacent,
    /// `f_k(t) / f_n(t)` for `0 <= k < n`
    General { k: usize },
    /// `f_{n-1}(t) / f_n(t)^{1 - 1/n}`
    Fractional,
    /// `V_n(t)`: the weighted sum `sum_{i=2..n} (n-1)...(n-i+1) x_i
    /// f_{n-i}(t) t^i / ((1 - x_1 t) f_{n-1}(t))`
    VSeries,
    /// `W_n(t) = ((1 - x_1 t) f_{n-1}(t))^{1/n} V_n(t)`
    WSeries,
}

/// Builds the requested quotient object from the `f` family and certifies
/// its monomial positivity to the given order.
pub fn verify_quotient(
    n: usize,
    kind: QuotientKind,
    order: usize,
) -> Result<PositivityVerdict, PositivityError> {
    let minimum = match kind {
        QuotientKind::VSeries | QuotientKind::WSeries => 2,
        _ => 1,
    };
    if n < minimum {
        return Err(StructError::DimensionTooSmall { minimum }.into());
    }
    let family = char_series_family(n, order);
    let verdict = match kind {
        QuotientKind::Adjacent => {
            let q = family[n - 1].mul(&family[n].reciprocal()?);
            check_nonneg(&q, false, format!("f_{}(t)/f_{n}(t)", n - 1))
        }
        QuotientKind::General { k } => {
            if k >= n {
                return Err(PositivityError::InvalidQuotient { n, k });
            }
            let q = family[k].mul(&family[n].reciprocal()?);
            check_nonneg(&q, false, format!("f_{k}(t)/f_{n}(t)"))
        }
        QuotientKind::Fractional => {
            let alpha = Rational::new(1 - n as i64, n as i64);
            let w = family[n - 1].mul(&family[n].pow(&alpha)?);
            check_nonneg(&w, false, format!("f_{}(t)/f_{n}(t)^{{1-1/{n}}}", n - 1))
        }
        QuotientKind::VSeries => {
            let v = v_series(&family, n, order)?;
            check_nonneg(&v, false, format!("V_{n}(t)"))
        }
        QuotientKind::WSeries => {
            let v = v_series(&family, n, order)?;
            let base = linear_factor(order).mul(&family[n - 1]);
            let w = base.pow(&Rational::new(1, n as i64))?.mul(&v);
            check_nonneg(&w, false, format!("W_{n}(t)"))
        }
    };
    Ok(verdict)
}

/// `1 - x_1 t` as a symbolic series.
fn linear_factor(order: usize) -> TruncatedSeries<MultiPoly> {
    TruncatedSeries::new(
        alloc::vec![MultiPoly::one(), MultiPoly::var(1).neg()],
        order,
    )
}

fn v_series(
    family: &[TruncatedSeries<MultiPoly>],
    n: usize,
    order: usize,
) -> Result<TruncatedSeries<MultiPoly>, PositivityError> {
    let mut numerator = TruncatedSeries::zero(order);
    for i in 2..=n {
        let coef = MultiPoly::var(i)
            .scale(&Rational::falling_factorial(n as u64 - 1, i as u64 - 1));
        numerator = numerator.add(&family[n - i].scaled(&coef).shifted(i));
    }
    let denominator = linear_factor(order).mul(&family[n - 1]);
    Ok(numerator.mul(&denominator.reciprocal()?))
}

/// Checks that `t_k(n) - t_k(n-1)` has no negative coefficient for
/// `k = 1..=k_max`. These differences are polynomials, so a clean scan is an
/// exact certificate.
pub fn verify_cor1(n: usize, k_max: usize) -> Result<PositivityVerdict, PositivityError> {
    if n < 2 {
        return Err(StructError::DimensionTooSmall { minimum: 2 }.into());
    }
    let larger = trace_table(n, k_max)?;
    let smaller = trace_table(n - 1, k_max)?;
    let diffs: Vec<MultiPoly> = (1..=k_max)
        .map(|k| larger.t(k).sub(smaller.t(k)))
        .collect();
    Ok(scan_terms(
        diffs.iter().enumerate().map(|(i, d)| (i + 1, d)),
        k_max,
        true,
        format!("t_k({n}) - t_k({}), k = 1..{k_max}", n - 1),
    ))
}

/// A spectrum, given as one of three equivalent forms:
/// a real rational eigenvalue list, a conjugate-closed list of complex
/// entries `(re, im)`, or the coefficients of
/// `f(t) = prod (1 - lambda_i t)` with constant coefficient 1, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumInput {
    Lambdas(Vec<Rational>),
    ComplexPairs(Vec<(Rational, Rational)>),
    FCoeffs(Vec<Rational>),
}

impl SpectrumInput {
    /// Number of spectrum elements (the polynomial degree for coefficient
    /// form).
    pub fn size(&self) -> usize {
        match self {
            SpectrumInput::Lambdas(l) => l.len(),
            SpectrumInput::ComplexPairs(p) => p.len(),
            SpectrumInput::FCoeffs(c) => c.len().saturating_sub(1),
        }
    }

    pub fn validate(&self) -> Result<(), PositivityError> {
        if self.size() == 0 {
            return Err(PositivityError::EmptySpectrum);
        }
        match self {
            SpectrumInput::Lambdas(_) => Ok(()),
            SpectrumInput::FCoeffs(c) => {
                if c[0].is_one() {
                    Ok(())
                } else {
                    Err(PositivityError::ConstantCoefficientNotOne)
                }
            }
            SpectrumInput::ComplexPairs(pairs) => {
                let mut used = alloc::vec![false; pairs.len()];
                for i in 0..pairs.len() {
                    if used[i] || pairs[i].1.is_zero() {
                        continue;
                    }
                    let conjugate = (pairs[i].0.clone(), -&pairs[i].1);
                    let partner = (0..pairs.len())
                        .find(|&j| j != i && !used[j] && pairs[j] == conjugate);
                    match partner {
                        Some(j) => {
                            used[i] = true;
                            used[j] = true;
                        }
                        None => return Err(PositivityError::NotConjugateClosed),
                    }
                }
                Ok(())
            }
        }
    }

    /// `f(t) = prod (1 - lambda_i t)` as an exact rational series, padded or
    /// truncated to the given order.
    pub fn f_series(&self, order: usize) -> Result<TruncatedSeries<Rational>, PositivityError> {
        self.validate()?;
        let coeffs = match self {
            SpectrumInput::FCoeffs(c) => c.clone(),
            SpectrumInput::Lambdas(lambdas) => {
                let mut coeffs = alloc::vec![Rational::one()];
                for lambda in lambdas {
                    coeffs.push(Rational::zero());
                    for j in (1..coeffs.len()).rev() {
                        let delta = &coeffs[j - 1] * lambda;
                        coeffs[j] = &coeffs[j] - &delta;
                    }
                }
                coeffs
            }
            SpectrumInput::ComplexPairs(pairs) => {
                // exact arithmetic in Q[i]; conjugate closure makes the
                // imaginary parts cancel
                let mut coeffs = alloc::vec![(Rational::one(), Rational::zero())];
                for (a, b) in pairs {
                    coeffs.push((Rational::zero(), Rational::zero()));
                    for j in (1..coeffs.len()).rev() {
                        let (re, im) = coeffs[j - 1].clone();
                        let delta_re = &(a * &re) - &(b * &im);
                        let delta_im = &(a * &im) + &(b * &re);
                        coeffs[j] = (&coeffs[j].0 - &delta_re, &coeffs[j].1 - &delta_im);
                    }
                }
                coeffs
                    .into_iter()
                    .map(|(re, im)| {
                        assert!(im.is_zero(), "conjugate-closed expansion must be real");
                        re
                    })
                    .collect()
            }
        };
        Ok(TruncatedSeries::new(coeffs, order))
    }

    /// Tail `[p_1, ..., p_n]` of the monic `F(x) = x^n + p_1 x^{n-1} + ...
    /// + p_n` with the spectrum as roots; these are exactly the `f`
    /// coefficients of `t^1..t^n`.
    pub fn monic_tail(&self) -> Result<Vec<Rational>, PositivityError> {
        let n = self.size();
        Ok(self.f_series(n)?.coeffs()[1..].to_vec())
    }
}

/// Exact power sums `s_1..s_k_max` of the spectrum, from the logarithmic
/// derivative of `f` — no root extraction.
pub fn power_sums(input: &SpectrumInput, k_max: usize) -> Result<Vec<Rational>, PositivityError> {
    Ok(input.f_series(k_max)?.log_derivative_sums()?)
}

/// Witness that no root index can ever work: a power sum `s_k <= 0` rules
/// out strictly positive coefficients of `1 - f^{1/N}` for every `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoRootCertificate {
    pub k: usize,
    pub s_k: Rational,
}

/// Result of the per-`N` scan of `1 - f(t)^{1/N}`.
#[derive(Clone, Debug)]
pub struct MinRootReport {
    pub order: usize,
    pub n_max: u32,
    /// Verdict for each `N = 1..=n_max`, in order.
    pub per_root: Vec<(u32, PositivityVerdict)>,
    /// Smallest `N` certified nonnegative up to `order`; a finite-order
    /// statement, not a proof for the infinite series.
    pub minimal_certified: Option<u32>,
    pub no_root_certificate: Option<NoRootCertificate>,
}

/// For each `N = 1..=n_max`, expands `1 - f(t)^{1/N}` to `order` and records
/// the verdict; also scans the power sums for the definitive
/// no-`N`-can-succeed certificate.
pub fn min_root_search(
    input: &SpectrumInput,
    order: usize,
    n_max: u32,
) -> Result<MinRootReport, PositivityError> {
    let f = input.f_series(order)?;
    let mut per_root = Vec::with_capacity(n_max as usize);
    let mut minimal_certified = None;
    for root in 1..=n_max {
        let h = f.pow(&Rational::new(1, root as i64))?;
        let verdict = check_one_minus(&h, false, format!("1 - f(t)^{{1/{root}}}"));
        if minimal_certified.is_none() && verdict.is_certified() {
            minimal_certified = Some(root);
        }
        per_root.push((root, verdict));
    }
    let sums = f.log_derivative_sums()?;
    let no_root_certificate = sums
        .iter()
        .position(|s| !s.is_positive())
        .map(|idx| NoRootCertificate { k: idx + 1, s_k: sums[idx].clone() });
    Ok(MinRootReport { order, n_max, per_root, minimal_certified, no_root_certificate })
}

/// One exact comparison `n^{k-1} s_{km} >= s_m^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JllCheck {
    pub m: usize,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// Dominance information for the leading eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub enum PerronCheck {
    /// Exact rational comparison, available for explicit eigenvalue forms:
    /// the largest real entry and whether it strictly dominates every other
    /// entry in modulus (and is nonnegative).
    Exact { perron: Option<Rational>, dominant: bool },
    /// Floating-point estimate from polynomial roots, for coefficient-only
    /// input. Advisory: never feeds any exact verdict.
    Advisory { root_moduli: Vec<f64>, dominant_estimate: bool },
}

/// Necessary-condition report for realizability of a spectrum.
#[derive(Clone, Debug)]
pub struct DiagnosticsReport {
    pub n: usize,
    pub k_max: usize,
    pub power_sums: Vec<Rational>,
    /// First `k` with `s_k < 0`, which refutes realizability.
    pub first_negative_power_sum: Option<usize>,
    /// Whether `s_k > 0` for every checked `k` (strict hypothesis of the
    /// root-positivity application).
    pub all_power_sums_positive: bool,
    pub jll: Vec<JllCheck>,
    pub jll_all_hold: bool,
    /// Whether `1 - f(t)` has nonnegative coefficients, i.e. the companion
    /// matrix of `F(x)` is entrywise nonnegative. A sufficient-condition
    /// probe, not a violation when false.
    pub companion_nonnegative: bool,
    pub perron: PerronCheck,
}

/// Runs the power-sum sign table, the `n^{k-1} s_{km} >= s_m^k` inequalities
/// for `km <= k_max` (the `k = 1` tautologies are skipped), the
/// companion-nonnegativity probe and the Perron dominance check.
pub fn spectrum_diagnostics(
    input: &SpectrumInput,
    k_max: usize,
) -> Result<DiagnosticsReport, PositivityError> {
    input.validate()?;
    let n = input.size();
    let sums = power_sums(input, k_max)?;
    let first_negative_power_sum = sums.iter().position(|s| s.is_negative()).map(|i| i + 1);
    let all_power_sums_positive = sums.iter().all(Rational::is_positive);

    let n_rat = Rational::from(n as i64);
    let mut jll = Vec::new();
    for m in 1..=k_max {
        for k in 2..=k_max {
            if k * m > k_max {
                break;
            }
            let lhs = &n_rat.pow(k as u32 - 1) * &sums[k * m - 1];
            let rhs = sums[m - 1].pow(k as u32);
            let holds = lhs >= rhs;
            jll.push(JllCheck { m, k, lhs, rhs, holds });
        }
    }
    let jll_all_hold = jll.iter().all(|c| c.holds);

    let f = input.f_series(n)?;
    let companion_nonnegative = f.coeffs()[1..].iter().all(|c| !c.is_positive());

    let perron = match input {
        SpectrumInput::Lambdas(lambdas) => {
            let pairs: Vec<(Rational, Rational)> = lambdas
                .iter()
                .map(|l| (l.clone(), Rational::zero()))
                .collect();
            exact_perron(&pairs)
        }
        SpectrumInput::ComplexPairs(pairs) => exact_perron(pairs),
        SpectrumInput::FCoeffs(_) => advisory_perron(&input.monic_tail()?),
    };

    Ok(DiagnosticsReport {
        n,
        k_max,
        power_sums: sums,
        first_negative_power_sum,
        all_power_sums_positive,
        jll,
        jll_all_hold,
        companion_nonnegative,
        perron,
    })
}

fn exact_perron(pairs: &[(Rational, Rational)]) -> PerronCheck {
    let mut best: Option<(usize, &Rational)> = None;
    for (i, (a, b)) in pairs.iter().enumerate() {
        if b.is_zero() && best.map_or(true, |(_, cur)| a > cur) {
            best = Some((i, a));
        }
    }
    let Some((best_idx, perron)) = best else {
        return PerronCheck::Exact { perron: None, dominant: false };
    };
    let perron_sq = perron.pow(2);
    let dominant = !perron.is_negative()
        && pairs.iter().enumerate().all(|(i, (a, b))| {
            i == best_idx || perron_sq > a.pow(2) + b.pow(2)
        });
    PerronCheck::Exact { perron: Some(perron.clone()), dominant }
}

/// Durand–Kerner root moduli of the monic polynomial with the given tail,
/// descending. Floating point; advisory only.
fn advisory_perron(monic_tail: &[Rational]) -> PerronCheck {
    let n = monic_tail.len();
    let coeffs: Vec<f64> = monic_tail.iter().map(Rational::to_f64_lossy).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(1.0, 0.0);
        for c in &coeffs {
            acc = acc * z + Complex64::new(*c, 0.0);
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-13 {
            break;
        }
    }
    let mut indexed: Vec<Complex64> = roots;
    indexed.sort_by(|a, b| b.norm().partial_cmp(&a.norm()).unwrap_or(core::cmp::Ordering::Equal));
    let root_moduli: Vec<f64> = indexed.iter().map(|z| z.norm()).collect();
    let dominant_estimate = match indexed.first() {
        None => false,
        Some(top) => {
            let scale = 1.0 + top.norm();
            top.im.abs() <= 1e-8 * scale
                && top.re > 0.0
                && indexed
                    .get(1)
                    .map_or(true, |second| second.norm() < top.norm() * (1.0 - 1e-9))
        }
    };
    PerronCheck::Advisory { root_moduli, dominant_estimate }
}

/// One step of the incremental realization search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizeAttempt {
    pub m: usize,
    /// First `k` with `x_k < 0`, when the attempt failed.
    pub first_negative: Option<usize>,
}

/// A successful realization: the structured matrix `X_m` specialized at the
/// nonnegative vector `x` has characteristic polynomial `x^{m-n} F(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    pub m: usize,
    pub x: Vec<Rational>,
    /// Ascending coefficients of the verified `det(xI - X_m)`.
    pub charpoly: Vec<Rational>,
    /// Always re-verified against `x^{m-n} F(x)`, never assumed.
    pub charpoly_verified: bool,
}

/// Report of the zero-appending realization search.
#[derive(Clone, Debug)]
pub struct RealizeReport {
    pub n: usize,
    pub m_max: usize,
    pub attempts: Vec<RealizeAttempt>,
    pub found: Option<Realization>,
}

/// Searches `m = n..=m_max` for a realization of the spectrum (with `m - n`
/// zeros appended) by a nonnegative `X_m`: scale the coefficients to
/// `q_i = p_i (m-i)!/m!`, take `x` to be the power sums of the roots of `q`,
/// and accept the first `m` with all `x_k >= 0`. Minimal only within this
/// one-parameter family; the scan reports every attempt.
pub fn bh_realize(input: &SpectrumInput, m_max: usize) -> Result<RealizeReport, PositivityError> {
    let p = input.monic_tail()?;
    let n = p.len();
    let mut attempts = Vec::new();
    let mut found = None;
    for m in n..=m_max {
        // reversal of q: 1 + q_1 t + ... + q_m t^m with q_i = p_i (m-i)!/m!
        let mut rev = alloc::vec![Rational::one()];
        for (i, p_i) in p.iter().enumerate() {
            let scale = Rational::falling_factorial(m as u64, i as u64 + 1)
                .recip()
                .unwrap();
            rev.push(p_i * &scale);
        }
        rev.resize(m + 1, Rational::zero());
        let f_q = TruncatedSeries::new(rev, m);
        let x = f_q.log_derivative_sums()?;

        match x.iter().position(Rational::is_negative) {
            Some(idx) => attempts.push(RealizeAttempt { m, first_negative: Some(idx + 1) }),
            None => {
                attempts.push(RealizeAttempt { m, first_negative: None });
                let computed = charpoly_from_series(&char_series_at(&x, m), m);
                let mut expected = alloc::vec![Rational::zero(); m + 1];
                expected[m] = Rational::one();
                for (i, p_i) in p.iter().enumerate() {
                    expected[m - 1 - i] = p_i.clone();
                }
                let charpoly_verified = computed == expected;
                found = Some(Realization { m, x, charpoly: computed, charpoly_verified });
                break;
            }
        }
    }
    Ok(RealizeReport { n, m_max, attempts, found })
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

    fn rq(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn polynomial_scan_finds_first_violation() {
        // p0(t) = t + (x1^2 - x2)^2 t^4 is not monomially positive
        let sq = poly(
            2,
            &[(r(1), &[4]), (r(-2), &[2, 1]), (r(1), &[0, 2])],
        );
        let p0 = TruncatedSeries::new(
            vec![MultiPoly::zero(), MultiPoly::one(), MultiPoly::zero(), MultiPoly::zero(), sq],
            4,
        );
        let verdict = check_nonneg(&p0, true, "p0".to_string());
        assert!(verdict.is_violated());
        let v = verdict.violation.unwrap();
        assert_eq!(v.t_power, 4);
        assert_eq!(v.monomial.exponents(), &[2, 1]);
        assert_eq!(v.coefficient, r(-2));
    }

    #[test]
    fn zero_series_is_exactly_certified() {
        let zero: TruncatedSeries<MultiPoly> = TruncatedSeries::zero(6);
        let verdict = check_nonneg(&zero, true, "zero".to_string());
        assert_eq!(verdict.status, VerdictStatus::CertifiedExact);
        assert!(!verdict.all_strictly_positive);
    }

    #[test]
    fn main_small_cases() {
        // n = 1: 1 - f_1 = x1 t, a polynomial
        let cert = verify_main(1, 6).unwrap();
        assert_eq!(cert.verdict.status, VerdictStatus::CertifiedExact);
        assert_eq!(cert.gammas[0], MultiPoly::var(1));

        // n = 2: gamma_1 = x1, gamma_2 = x2/2
        let cert = verify_main(2, 8).unwrap();
        assert!(cert.verdict.is_certified());
        assert_eq!(cert.gammas[0], MultiPoly::var(1));
        assert_eq!(cert.gammas[1], MultiPoly::var(2).scale(&rq(1, 2)));
    }

    #[test]
    fn root_lower_bound() {
        // n = 3, N = 2: gamma_2 of 1 - (1-t)^{3/2} is -3/8
        let verdict = verify_root_lower_bound(3, 2, 10).unwrap();
        assert!(verdict.is_violated());
        let v = verdict.violation.unwrap();
        assert_eq!(v.t_power, 2);
        assert_eq!(v.coefficient, rq(-3, 8));

        // N = n is the exact polynomial 1 - (1 - t)
        let verdict = verify_root_lower_bound(3, 3, 10).unwrap();
        assert_eq!(verdict.status, VerdictStatus::CertifiedExact);

        // n = 5, N = 4 violated
        assert!(verify_root_lower_bound(5, 4, 10).unwrap().is_violated());
        // N >= n certified
        assert!(verify_root_lower_bound(3, 5, 10).unwrap().is_certified());

        assert_eq!(
            verify_root_lower_bound(3, 0, 10).unwrap_err(),
            PositivityError::RootIndexZero
        );
    }

    #[test]
    fn quotient_adjacent() {
        // n = 1: f_0/f_1 = 1/(1 - x1 t), geometric
        let verdict = verify_quotient(1, QuotientKind::Adjacent, 8).unwrap();
        assert!(verdict.is_certified());

        // n = 2: coefficients x1, x1^2 + x2, ...
        let family = char_series_family(2, 8);
        let q = family[1].mul(&family[2].reciprocal().unwrap());
        assert_eq!(q.coeff(1), &MultiPoly::var(1));
        assert_eq!(q.coeff(2), &poly(2, &[(r(1), &[2]), (r(1), &[0, 1])]));
        assert!(verify_quotient(2, QuotientKind::Adjacent, 8).unwrap().is_certified());
    }

    #[test]
    fn quotient_kinds_and_errors() {
        assert!(verify_quotient(3, QuotientKind::General { k: 0 }, 8)
            .unwrap()
            .is_certified());
        assert_eq!(
            verify_quotient(3, QuotientKind::General { k: 3 }, 8).unwrap_err(),
            PositivityError::InvalidQuotient { n: 3, k: 3 }
        );
        assert!(verify_quotient(3, QuotientKind::Fractional, 10).unwrap().is_certified());
        assert!(verify_quotient(3, QuotientKind::VSeries, 10).unwrap().is_certified());
        assert!(verify_quotient(3, QuotientKind::WSeries, 10).unwrap().is_certified());
        assert_eq!(
            verify_quotient(1, QuotientKind::VSeries, 8).unwrap_err(),
            PositivityError::Struct(StructError::DimensionTooSmall { minimum: 2 })
        );
    }

    #[test]
    fn cor1_differences() {
        let verdict = verify_cor1(2, 4).unwrap();
        assert_eq!(verdict.status, VerdictStatus::CertifiedExact);
        // the k = 2 difference is exactly x2
        let larger = trace_table(2, 2).unwrap();
        let smaller = trace_table(1, 2).unwrap();
        assert_eq!(larger.t(2).sub(smaller.t(2)), MultiPoly::var(2));
    }

    #[test]
    fn power_sums_examples() {
        let sigma = SpectrumInput::Lambdas(vec![r(1), rq(9, 10), rq(-9, 10)]);
        let s = power_sums(&sigma, 3).unwrap();
        assert_eq!(s, vec![r(1), rq(131, 50), r(1)]);

        // f = (1 - t^2)(1 - t^3): s_1 = 0 and s_5 = 0
        let f = SpectrumInput::FCoeffs(vec![r(1), r(0), r(-1), r(-1), r(0), r(1)]);
        let s = power_sums(&f, 6).unwrap();
        assert_eq!(s[0], r(0));
        assert_eq!(s[4], r(0));

        let single = SpectrumInput::Lambdas(vec![rq(2, 3)]);
        let s = power_sums(&single, 4).unwrap();
        for (k, s_k) in s.iter().enumerate() {
            assert_eq!(s_k, &rq(2, 3).pow(k as u32 + 1));
        }
    }

    #[test]
    fn complex_pairs_expand_exactly() {
        // (1, i, -i): f = (1 - t)(1 + t^2)
        let sigma = SpectrumInput::ComplexPairs(vec![
            (r(1), r(0)),
            (r(0), r(1)),
            (r(0), r(-1)),
        ]);
        let f = sigma.f_series(3).unwrap();
        assert_eq!(f.coeffs(), &[r(1), r(-1), r(1), r(-1)]);

        let open = SpectrumInput::ComplexPairs(vec![(r(0), r(1))]);
        assert_eq!(open.validate().unwrap_err(), PositivityError::NotConjugateClosed);
    }

    #[test]
    fn input_validation() {
        assert_eq!(
            SpectrumInput::Lambdas(vec![]).validate().unwrap_err(),
            PositivityError::EmptySpectrum
        );
        assert_eq!(
            SpectrumInput::FCoeffs(vec![r(2), r(1)]).validate().unwrap_err(),
            PositivityError::ConstantCoefficientNotOne
        );
    }

    #[test]
    fn min_root_counterexample_certificate() {
        let f = SpectrumInput::FCoeffs(vec![r(1), r(0), r(-1), r(-1), r(0), r(1)]);
        let report = min_root_search(&f, 30, 8).unwrap();
        assert_eq!(report.minimal_certified, None);
        for (_, verdict) in &report.per_root {
            assert!(verdict.is_violated());
            assert_eq!(verdict.violation.as_ref().unwrap().t_power, 5);
        }
        let cert = report.no_root_certificate.unwrap();
        assert_eq!(cert.k, 1);
        assert_eq!(cert.s_k, r(0));
    }

    #[test]
    fn min_root_paper_fixture_small_order() {
        let sigma = SpectrumInput::Lambdas(vec![r(1), rq(9, 10), rq(-9, 10)]);
        let report = min_root_search(&sigma, 60, 5).unwrap();
        assert_eq!(report.minimal_certified, Some(4));
        assert!(report.per_root[2].1.is_violated());
        assert!(report.no_root_certificate.is_none());
    }

    #[test]
    fn diagnostics_suleimanova_case() {
        // sigma = (2, -1): f = 1 - t - 2 t^2, 1 - f = t + 2 t^2 nonnegative
        let sigma = SpectrumInput::Lambdas(vec![r(2), r(-1)]);
        let report = spectrum_diagnostics(&sigma, 6).unwrap();
        assert!(report.companion_nonnegative);
        assert!(report.jll_all_hold);
        assert_eq!(report.first_negative_power_sum, None);
        match &report.perron {
            PerronCheck::Exact { perron, dominant } => {
                assert_eq!(perron.as_ref(), Some(&r(2)));
                assert!(dominant);
            }
            _ => panic!("expected exact perron data"),
        }
    }

    #[test]
    fn diagnostics_jll_values() {
        let sigma = SpectrumInput::Lambdas(vec![r(1), rq(9, 10), rq(-9, 10)]);
        let report = spectrum_diagnostics(&sigma, 4).unwrap();
        let check = report
            .jll
            .iter()
            .find(|c| c.m == 1 && c.k == 2)
            .unwrap();
        assert_eq!(check.lhs, rq(393, 50));
        assert_eq!(check.rhs, r(1));
        assert!(check.holds);
        assert!(!report.companion_nonnegative);
    }

    #[test]
    fn diagnostics_single_element() {
        let sigma = SpectrumInput::Lambdas(vec![r(1)]);
        let report = spectrum_diagnostics(&sigma, 5).unwrap();
        assert!(report.all_power_sums_positive);
        assert!(report.jll_all_hold);
        assert!(report.companion_nonnegative);
        match &report.perron {
            PerronCheck::Exact { dominant, .. } => assert!(dominant),
            _ => panic!("expected exact perron data"),
        }
    }

    #[test]
    fn advisory_perron_estimates_roots() {
        // f of (2, -1) in coefficient form: advisory path
        let f = SpectrumInput::FCoeffs(vec![r(1), r(-1), r(-2)]);
        let report = spectrum_diagnostics(&f, 4).unwrap();
        match &report.perron {
            PerronCheck::Advisory { root_moduli, dominant_estimate } => {
                assert_eq!(root_moduli.len(), 2);
                assert!((root_moduli[0] - 2.0).abs() < 1e-9);
                assert!((root_moduli[1] - 1.0).abs() < 1e-9);
                assert!(dominant_estimate);
            }
            _ => panic!("expected advisory perron data"),
        }
    }

    #[test]
    fn realize_trivial_and_hand_case() {
        let single = SpectrumInput::Lambdas(vec![rq(7, 2)]);
        let report = bh_realize(&single, 5).unwrap();
        let found = report.found.unwrap();
        assert_eq!(found.m, 1);
        assert_eq!(found.x, vec![rq(7, 2)]);
        assert!(found.charpoly_verified);

        // sigma = (3, -1, -1, -1): m = 4 with x = (0, 1, 1, 1)
        let sigma = SpectrumInput::Lambdas(vec![r(3), r(-1), r(-1), r(-1)]);
        let report = bh_realize(&sigma, 10).unwrap();
        let found = report.found.unwrap();
        assert_eq!(found.m, 4);
        assert_eq!(found.x, vec![r(0), r(1), r(1), r(1)]);
        assert!(found.charpoly_verified);
        // det(xI - X_4) = x^4 - 6x^2 - 8x - 3
        assert_eq!(found.charpoly, vec![r(-3), r(-8), r(-6), r(0), r(1)]);
    }

    #[test]
    fn realize_reports_failures() {
        // negative trace cannot be realized; every attempt fails at k = 1
        let sigma = SpectrumInput::Lambdas(vec![r(-1)]);
        let report = bh_realize(&sigma, 4).unwrap();
        assert!(report.found.is_none());
        assert_eq!(report.attempts.len(), 4);
        for attempt in &report.attempts {
            assert_eq!(attempt.first_negative, Some(1));
        }
    }
}
