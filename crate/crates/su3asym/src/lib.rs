//! Representation counting for SU(3): exact counts `r(n)`, the Witten zeta
//! function, and the full asymptotic expansion of `r(n)`.
//!
//! Numerical kernels are generic over [`scalar::RealScalar`]; the aliases
//! below fix the usual choices.

pub mod cache;
pub mod counting;
pub mod cplx;
pub mod error;
pub mod harness;
pub mod real;
pub mod saddle;
pub mod scalar;
pub mod series;
pub mod special;
pub mod witten;
pub mod xpoly;

pub use error::{Error, Result};
pub use real::Real;

/// Complex number at the working precision.
pub type ComplexHP = num_complex::Complex<Real>;
/// Double-precision complex number.
pub type Complex64 = num_complex::Complex<f64>;
/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// Power series over exact rationals.
pub type RationalSeries = series::PowerSeries<Rational>;
/// Power series over working-precision reals.
pub type RealSeries = series::PowerSeries<Real>;
/// Polynomial in `x` with complex working-precision coefficients.
pub type ComplexXPoly = xpoly::XPolynomial<ComplexHP>;
