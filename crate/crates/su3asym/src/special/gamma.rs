//! Complex gamma function by the Stirling series with argument shifting.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::cplx;
use crate::error::{Error, Result};
use crate::scalar::RealScalar;
use crate::special::bernoulli::bernoulli_scalars;

/// Exact nonpositive integer, if `s` is one.
fn pole_index<T: RealScalar>(s: &Complex<T>) -> Option<i64> {
    if !s.im.is_zero() {
        return None;
    }
    let r = s.re.to_f64();
    if r > 0.5 || r.round() != r {
        return None;
    }
    let n = r as i64;
    if s.re == T::from_i64(n) {
        Some(n)
    } else {
        None
    }
}

/// Shift `K` and number of Stirling terms for `Γ(s + K)`.
fn stirling_plan(s_re: f64, s_im: f64, digits: u32) -> (usize, usize) {
    let target = 10.0 * digits as f64 / 15.0;
    let k = (target - s_re).ceil().max(0.0) as usize;
    let z = (s_re + k as f64).hypot(s_im);
    let tol = 10f64.powi(-(digits as i32) - 3);
    // |B_2k| / (2k(2k-1)|z|^(2k-1)), with |B_2k| ≈ 2 (2k)!/(2π)^(2k)
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut term = 1.0 / (12.0 * z);
    let mut p = 1;
    while term > tol && p < 4000 {
        let kk = p as f64;
        term *= (2.0 * kk) * (2.0 * kk - 1.0) / (two_pi * two_pi * z * z);
        p += 1;
    }
    (k, p)
}

/// `log Γ(z)` by the Stirling series; accurate when `|z|` is large enough
/// for `p` terms to converge.
fn ln_gamma_stirling<T: RealScalar>(z: &Complex<T>, p: usize) -> Complex<T> {
    let b = bernoulli_scalars::<T>(p);
    let half = T::one().div_i64(2);
    let lnz = cplx::ln(z);
    let ln2pi = (T::pi() * T::from_i64(2)).ln();
    let mut acc = (z.clone() - Complex::new(half.clone(), T::zero())) * lnz - z.clone()
        + Complex::new(ln2pi * half, T::zero());
    let zi = cplx::recip(z);
    let zi2 = zi.clone() * zi.clone();
    let mut zp = zi;
    for k in 1..=p {
        let c = b[k].div_i64((2 * k * (2 * k - 1)) as i64);
        acc = acc + zp.clone() * c;
        zp = zp * zi2.clone();
    }
    acc
}

/// `Γ(s)` for `Re s ≥ 1/2`.
fn gamma_right<T: RealScalar>(s: &Complex<T>) -> Complex<T> {
    let (k, p) = stirling_plan(s.re.to_f64(), s.im.to_f64(), T::working_digits());
    let mut prod = Complex::<T>::one();
    for j in 0..k {
        prod = prod * (s.clone() + T::from_i64(j as i64));
    }
    let z = s.clone() + T::from_i64(k as i64);
    cplx::exp(&ln_gamma_stirling(&z, p)) / prod
}

/// `Γ(s)`; fails at the poles `0, -1, -2, ...`.
pub fn gamma<T: RealScalar>(s: &Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = pole_index(s) {
        return Err(Error::GammaPole(n));
    }
    let half = T::one().div_i64(2);
    if s.re >= half {
        Ok(gamma_right(s))
    } else {
        let one_minus = Complex::<T>::one() - s.clone();
        let sp = cplx::sin_pi(s);
        Ok(Complex::new(T::pi(), T::zero()) / (sp * gamma_right(&one_minus)))
    }
}

/// `1/Γ(s)`, entire; exactly zero at the poles of `Γ`.
pub fn rgamma<T: RealScalar>(s: &Complex<T>) -> Complex<T> {
    if pole_index(s).is_some() {
        return Complex::zero();
    }
    let half = T::one().div_i64(2);
    if s.re >= half {
        cplx::recip(&gamma_right(s))
    } else {
        let one_minus = Complex::<T>::one() - s.clone();
        cplx::sin_pi(s) * gamma_right(&one_minus) / T::pi()
    }
}

/// Principal-branch `log Γ(s)` for `Re s ≥ 1/2` (Stirling, shifted).
pub fn ln_gamma<T: RealScalar>(s: &Complex<T>) -> Complex<T> {
    let (k, p) = stirling_plan(s.re.to_f64(), s.im.to_f64(), T::working_digits());
    let mut acc = Complex::<T>::zero();
    for j in 0..k {
        acc = acc + cplx::ln(&(s.clone() + T::from_i64(j as i64)));
    }
    let z = s.clone() + T::from_i64(k as i64);
    ln_gamma_stirling(&z, p) - acc
}

/// Rising factorial `(s)_k = s (s+1) ... (s+k-1)`.
pub fn pochhammer<T: RealScalar>(s: &Complex<T>, k: usize) -> Complex<T> {
    let mut acc = Complex::<T>::one();
    for j in 0..k {
        acc = acc * (s.clone() + T::from_i64(j as i64));
    }
    acc
}

/// Generalized binomial coefficient `Γ(s+1) / (Γ(z+1) Γ(s-z+1))`.
pub fn binom_general<T: RealScalar>(s: &Complex<T>, z: &Complex<T>) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    let num = gamma(&(s.clone() + one.clone()))?;
    Ok(num * rgamma(&(z.clone() + one.clone())) * rgamma(&(s.clone() - z.clone() + one)))
}

/// Some logarithm of `Π Γ(a_i)` (branch unspecified), for use through
/// `exp`. The argument shifts of all factors share one complex log.
pub fn ln_gamma_product<T: RealScalar>(args: &[Complex<T>]) -> Complex<T> {
    let digits = T::working_digits();
    let mut acc = Complex::<T>::zero();
    let mut prod = Complex::<T>::one();
    for a in args {
        let (k, p) = stirling_plan(a.re.to_f64(), a.im.to_f64(), digits);
        for j in 0..k {
            prod = prod * (a.clone() + T::from_i64(j as i64));
        }
        acc = acc + ln_gamma_stirling(&(a.clone() + T::from_i64(k as i64)), p);
    }
    acc - cplx::ln(&prod)
}
