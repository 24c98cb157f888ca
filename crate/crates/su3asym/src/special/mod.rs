//! Special functions at arbitrary precision: Γ, 1/Γ, ζ, Hurwitz ζ and
//! generalized binomial coefficients, generic over the real scalar.

pub mod bernoulli;
pub mod gamma;
pub mod zeta;

pub use gamma::{binom_general, gamma, ln_gamma, ln_gamma_product, pochhammer, rgamma};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_offsets, zeta, zeta_em, zeta_fe};

use num_complex::Complex;

use crate::error::Result;
use crate::scalar::RealScalar;

/// Real-argument convenience wrapper for `ζ`.
pub fn zeta_real<T: RealScalar>(s: T) -> Result<T> {
    Ok(zeta(&Complex::new(s, T::zero()))?.re)
}

/// Real-argument convenience wrapper for `Γ`.
pub fn gamma_real<T: RealScalar>(s: T) -> Result<T> {
    Ok(gamma(&Complex::new(s, T::zero()))?.re)
}
