//! Elementary functions on `Complex<T>` for any [`RealScalar`].

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::scalar::RealScalar;

pub fn abs<T: RealScalar>(z: &Complex<T>) -> T {
    (z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()).sqrt()
}

pub fn abs_f64<T: RealScalar>(z: &Complex<T>) -> f64 {
    z.re.to_f64().hypot(z.im.to_f64())
}

pub fn arg<T: RealScalar>(z: &Complex<T>) -> T {
    T::atan2(&z.im, &z.re)
}

pub fn exp<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    let m = z.re.exp();
    if z.im.is_zero() {
        return Complex::new(m, T::zero());
    }
    Complex::new(m.clone() * z.im.cos(), m * z.im.sin())
}

/// Principal logarithm.
pub fn ln<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    if z.im.is_zero() && z.re > T::zero() {
        return Complex::new(z.re.ln(), T::zero());
    }
    let r2 = z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone();
    Complex::new(r2.ln().div_i64(2), arg(z))
}

/// Principal power `z^w`.
pub fn pow<T: RealScalar>(z: &Complex<T>, w: &Complex<T>) -> Complex<T> {
    if z.is_zero() {
        return Complex::zero();
    }
    exp(&(ln(z) * w.clone()))
}

/// `x^{-s}` for a positive real base.
pub fn real_pow_neg<T: RealScalar>(x: &T, s: &Complex<T>) -> Complex<T> {
    let l = x.ln();
    exp(&Complex::new(-(l.clone() * s.re.clone()), -(l * s.im.clone())))
}

pub fn sqrt<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    if z.is_zero() {
        return Complex::zero();
    }
    let r = abs(z);
    let re = ((r.clone() + z.re.clone()).div_i64(2)).sqrt();
    let im = ((r - z.re.clone()).div_i64(2)).sqrt();
    if z.im < T::zero() {
        Complex::new(re, -im)
    } else {
        Complex::new(re, im)
    }
}

pub fn sin<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    let (ch, sh) = cosh_sinh(&z.im);
    Complex::new(z.re.sin() * ch, z.re.cos() * sh)
}

pub fn cos<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    let (ch, sh) = cosh_sinh(&z.im);
    Complex::new(z.re.cos() * ch, -(z.re.sin() * sh))
}

fn cosh_sinh<T: RealScalar>(y: &T) -> (T, T) {
    if y.is_zero() {
        return (T::one(), T::zero());
    }
    let e = y.exp();
    let ei = T::one() / e.clone();
    let cosh = (e.clone() + ei.clone()).div_i64(2);
    if y.abs().to_f64() > 0.1 {
        return (cosh, (e - ei).div_i64(2));
    }
    // series keeps relative accuracy of sinh for small y
    let eps = T::epsilon();
    let y2 = y.clone() * y.clone();
    let mut term = y.clone();
    let mut sinh = y.clone();
    let mut k = 1;
    while term.abs() > eps.clone() * sinh.abs() {
        term = term * y2.clone() / T::from_i64((2 * k) * (2 * k + 1));
        sinh = sinh + term.clone();
        k += 1;
    }
    (cosh, sinh)
}

/// `sin(pi z)` with the real part reduced to `[-1/2, 1/2]` first, so
/// large arguments and arguments near integers keep their precision.
pub fn sin_pi<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    let n = z.re.to_f64().round();
    let re = z.re.clone() - T::from_f64(n);
    let v = sin(&(Complex::new(re, z.im.clone()) * T::pi()));
    if n.rem_euclid(2.0) == 1.0 {
        -v
    } else {
        v
    }
}

pub fn cos_pi<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    let half = Complex::new(T::one().div_i64(2), T::zero());
    sin_pi(&(z.clone() + half))
}

pub fn recip<T: RealScalar>(z: &Complex<T>) -> Complex<T> {
    Complex::<T>::one() / z.clone()
}

pub fn from_f64<T: RealScalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::from_f64(re), T::from_f64(im))
}

pub fn to_f64<T: RealScalar>(z: &Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// The integer within `tol` of `z`, if any.
pub fn near_integer<T: RealScalar>(z: &Complex<T>, tol: f64) -> Option<i64> {
    let re = z.re.to_f64();
    let n = re.round();
    if z.im.to_f64().abs() <= tol && (re - n).abs() <= tol {
        Some(n as i64)
    } else {
        None
    }
}

/// `-log10 |a - b|`, or `f64::INFINITY` if equal.
pub fn agree_digits<T: RealScalar>(a: &Complex<T>, b: &Complex<T>) -> f64 {
    let d = a.clone() - b.clone();
    -log10_abs(&d)
}

pub fn log10_abs<T: RealScalar>(z: &Complex<T>) -> f64 {
    if z.is_zero() {
        return f64::NEG_INFINITY;
    }
    let a = abs(z);
    a.ln().to_f64() / std::f64::consts::LN_10
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::Real;
    use crate::scalar::Ring;

    #[test]
    fn exp_ln_roundtrip() {
        let z: Complex<Real> = from_f64(-0.7, 2.3);
        let w = exp(&ln(&z));
        assert!(agree_digits(&w, &z) > 55.0);
    }

    #[test]
    fn sqrt_branch() {
        let z: Complex<f64> = Complex::new(-4.0, -0.0);
        let r = sqrt(&z);
        assert!((r.im.abs() - 2.0).abs() < 1e-15);
        let z: Complex<Real> = from_f64(3.0, -4.0);
        let r = sqrt(&z);
        assert!(agree_digits(&(r.clone() * r), &z) > 55.0);
    }

    #[test]
    fn sin_pi_reduction() {
        let z: Complex<Real> = from_f64(1000.25, 0.0);
        let s = sin_pi(&z);
        let expect = Real::from_i64(2).sqrt().div_i64(2);
        assert!((s.re - expect).abs().log10_abs() < -55.0);
    }
}
