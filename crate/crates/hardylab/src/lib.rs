//! Spectral laboratory for the fractional powers of the Schrodinger operator
//! `L u = -Δu - α/|x|_k² u` on the unit ball.
//!
//! The crate builds the exact Bessel eigen-catalog of `L` for `k = N`, applies
//! fractional powers spectrally, attaches the degenerate-weight extension in
//! one extra variable via closed-form Bessel-K profiles, and runs the Almgren
//! frequency / blow-up pipeline on the extended fields: height and energy
//! functions, frequency monotonicity, Pohozaev residuals, doubling bounds,
//! Fourier coefficients on the weighted hemisphere and the asymptotic-profile
//! classification at the origin.
//!
//! Modules mirror the pipeline stages:
//!
//! * [`numerics`] — special functions, quadrature and dense symmetric
//!   eigensolvers that everything else consumes,
//! * [`spectrum`] — the eigen-catalog on the ball, fractional application,
//!   Galerkin solutions of `L^s u = λ g u` and Hardy-inequality audits,
//! * [`sphere`] — angular and weighted-hemisphere eigenproblems with their
//!   closed-form first eigenvalues and the exponent algebra,
//! * [`extension`] — extension profiles, the Neumann trace constant and
//!   evaluation of extended fields with gradients,
//! * [`almgren`] — height/energy/frequency machinery and its audits,
//! * [`blowup`] — rescaled families, exponent fits, Fourier/beta coefficients
//!   and unique-continuation certificates.
//!
//! With the default `parallel` feature the grid scans (frequency profiles,
//! per-λ blow-up work, parameter sweeps) run as rayon data-parallel maps with
//! a fixed assembly order; disabling the feature yields a dependency-free
//! sequential build with identical results.

pub mod almgren;
pub mod blowup;
pub mod extension;
pub mod numerics;
pub mod par;
pub mod sphere;
pub mod spectrum;
