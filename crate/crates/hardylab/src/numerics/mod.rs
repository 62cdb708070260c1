//! Numerical bedrock: special functions, Gaussian quadrature and dense
//! symmetric (generalized) eigensolvers.
//!
//! Everything here is a pure function of its inputs; the structs are immutable
//! after construction and safe to share across threads.

mod bessel;
mod eig;
mod gamma;
mod quad;

pub use bessel::{bessel_j, bessel_j_deriv, bessel_j_zero, bessel_k};
pub use eig::{sym_eig, tridiag_eigenvalues, tridiag_eigenvector, Mat, SymEigResult};
pub use gamma::{gamma_fn, ln_gamma};
pub use quad::QuadRule;

use thiserror::Error;

/// Errors from the numerics layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    /// Gamma function evaluated at a pole (non-positive integer).
    #[error("gamma function pole at x = {x}")]
    GammaPole { x: f64 },
    /// Gauss–Jacobi weight exponents must exceed -1.
    #[error("invalid jacobi parameters a = {a}, b = {b} (need a,b > -1)")]
    InvalidJacobiParams { a: f64, b: f64 },
    /// Cholesky factorization of the mass matrix hit a non-positive pivot.
    #[error("matrix not positive definite: pivot {pivot} is {value:.3e}")]
    NotPositiveDefinite { pivot: usize, value: f64 },
    /// QL iteration failed to converge on some eigenvalue.
    #[error("eigensolver failed to converge at index {index}")]
    EigNoConvergence { index: usize },
    /// Matrix dimensions do not match.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Surface measure of the unit sphere `S^{d-1}` in `R^d`.
pub fn sphere_area(dim: usize) -> f64 {
    let d = dim as f64;
    2.0 * std::f64::consts::PI.powf(d / 2.0) / gamma_fn(d / 2.0).expect("d/2 > 0")
}

/// Sharp constant of the fractional Hardy inequality on the whole space,
/// `2^{2s} Γ²((N+2s)/4) / Γ²((N-2s)/4)`.
pub fn herbst_constant(dim: usize, s: f64) -> f64 {
    let n = dim as f64;
    let num = gamma_fn((n + 2.0 * s) / 4.0).expect("positive argument");
    let den = gamma_fn((n - 2.0 * s) / 4.0).expect("positive argument");
    (2.0f64).powf(2.0 * s) * num * num / (den * den)
}
