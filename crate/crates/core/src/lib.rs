//! Exact computation with banded structured matrices, their characteristic
//! power series, and monomial-positivity certificates.
//!
//! The central object is the n-by-n matrix `X_n` that carries variables
//! `x_1..x_n` down its first column and along constant diagonals, the
//! integers `1..n-1` on its superdiagonal, and zeros above. Everything this
//! crate computes about `X_n` — characteristic series, traces, trace-vector
//! identities, determinant formulas for the coefficients of n-th roots — is
//! done in exact rational arithmetic, and positivity claims are returned as
//! re-checkable certificates rather than booleans.
//!
//! Modules:
//! - [`rational`]: arbitrary-precision rational scalars.
//! - [`poly`]: sparse multivariate polynomials with the weighted grading
//!   `wt(x_j) = j`.
//! - [`series`]: truncated power series in `t` over either ring, with
//!   product, reciprocal, log, exp and rational powers.
//! - [`matrix`]: dense square matrices and exact determinants.
//! - [`structmat`]: the `X_n` family, its characteristic series `f_n`,
//!   trace tables and the determinant route to root coefficients.
//! - [`positivity`]: monomial-positivity verdicts, scalar minimal-root
//!   search and spectrum realizability diagnostics.
//!
//! The crate is `no_std` compatible (requires `alloc`); the `std` feature
//! (default) only widens the floating-point advisory in
//! [`positivity::spectrum_diagnostics`] error types and is what the CLI
//! companion crate builds against.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod matrix;
pub mod poly;
pub mod positivity;
pub mod rational;
pub mod ring;
pub mod series;
pub mod structmat;

pub use poly::{ExponentVector, MultiPoly};
pub use rational::{ParseRationalError, Rational};
pub use ring::{Ring, TermSigns};
pub use series::{SeriesError, TruncatedSeries};
