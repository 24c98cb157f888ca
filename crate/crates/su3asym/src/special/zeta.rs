//! Riemann and Hurwitz zeta functions by Euler–Maclaurin summation.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::cplx;
use crate::error::{Error, Result};
use crate::scalar::{Ring, RealScalar};
use crate::special::bernoulli::bernoulli_scalars;
use crate::special::gamma::gamma;

/// Cutoff `N` and Bernoulli depth `P` for Euler–Maclaurin at `s`, shift `a`.
///
/// The k-th correction is about `2 |(s)_(2k-1)| (N+a)^(-σ-2k+1) / (2π)^(2k)`.
/// `N` grows until some `P` pushes it below `10^-(digits+3)` times the
/// largest term of the sum, so tiny values such as `ζ(σ ≫ 1, a)` keep
/// their relative accuracy.
pub fn em_plan(s_re: f64, s_im: f64, a: f64, digits: u32) -> (usize, usize) {
    let s_abs = s_re.hypot(s_im);
    let mut n = 2usize.max((s_abs / 10.0) as usize);
    loop {
        if let Some(p) = em_depth(s_re, s_im, a, n, digits) {
            return (n, p);
        }
        n = (n as f64 * 1.3).ceil() as usize + 1;
    }
}

/// Bernoulli depth reaching the tolerance of [`em_plan`] with cutoff `n`,
/// or `None` if the asymptotic series turns before getting there.
pub fn em_depth(s_re: f64, s_im: f64, a: f64, n: usize, digits: u32) -> Option<usize> {
    let tol_log = -((digits + 3) as f64) * std::f64::consts::LN_10;
    let two_pi_ln = (2.0 * std::f64::consts::PI).ln();
    let s_abs = s_re.hypot(s_im).max(1e-300);
    let first = -s_re * a.max(1.0).ln();
    let na = n as f64 + a;
    let ln_na = na.ln();
    let lead = (1.0 - s_re) * ln_na - (s_re - 1.0).hypot(s_im).max(1.0).ln();
    let scale = first.max(lead);
    let mut lfac = s_abs.ln();
    let mut prev = f64::INFINITY;
    for k in 1..=4000usize {
        let kk = k as f64;
        let lt = 2f64.ln() + lfac - 2.0 * kk * two_pi_ln - (s_re + 2.0 * kk - 1.0) * ln_na;
        if lt < tol_log + scale {
            return Some(k);
        }
        if lt > prev {
            return None;
        }
        prev = lt;
        lfac += (s_re + 2.0 * kk - 1.0).hypot(s_im).max(1e-300).ln();
        lfac += (s_re + 2.0 * kk).hypot(s_im).max(1e-300).ln();
    }
    None
}

/// `m^(-s)` for `m = lo .. lo+len-1` by multiplicativity, so only primes
/// need a complex exponential.
pub fn inverse_powers<T: RealScalar>(s: &Complex<T>, lo: usize, len: usize) -> Vec<Complex<T>> {
    let hi = lo + len;
    let mut spf = vec![0usize; hi];
    for i in 2..hi {
        if spf[i] == 0 {
            let mut j = i;
            while j < hi {
                if spf[j] == 0 {
                    spf[j] = i;
                }
                j += i;
            }
        }
    }
    let mut all: Vec<Option<Complex<T>>> = vec![None; hi];
    if hi > 1 {
        all[1] = Some(Complex::one());
    }
    for m in 2..hi {
        let p = spf[m];
        let v = if p == m {
            cplx::real_pow_neg(&T::from_i64(m as i64), s)
        } else {
            all[p].clone().expect("prime power") * all[m / p].clone().expect("cofactor power")
        };
        all[m] = Some(v);
    }
    all.into_iter().skip(lo).take(len).map(|v| v.unwrap_or_else(Complex::zero)).collect()
}

/// Euler–Maclaurin tail `Σ_{m ≥ base} m^(-s)` given `base^(-s)` and the depth.
pub(crate) fn em_tail<T: RealScalar>(s: &Complex<T>, base: &T, base_pow: &Complex<T>, p: usize) -> Complex<T> {
    let one = Complex::<T>::one();
    let b = bernoulli_scalars::<T>(p);
    let inv = T::one() / base.clone();
    let inv2 = inv.clone() * inv.clone();
    let mut acc = base_pow.clone() * base.clone() / (s.clone() - one.clone()) + base_pow.clone().div_i64(2);
    // term_k = B_2k/(2k)! (s)_(2k-1) base^(-s-2k+1)
    let mut poch = s.clone();
    let mut pw = base_pow.clone() * inv;
    let mut fact = T::from_i64(2);
    for k in 1..=p {
        acc = acc + poch.clone() * pw.clone() * (b[k].clone() / fact.clone());
        let kk = k as i64;
        poch = poch * (s.clone() + T::from_i64(2 * kk - 1)) * (s.clone() + T::from_i64(2 * kk));
        pw = pw * inv2.clone();
        fact = fact * T::from_i64((2 * kk + 1) * (2 * kk + 2));
    }
    acc
}

/// `ζ(s)` by Euler–Maclaurin, valid for every `s ≠ 1` but planned for `Re s ≥ 1/2`.
pub fn zeta_em<T: RealScalar>(s: &Complex<T>) -> Result<Complex<T>> {
    if s.im.is_zero() && s.re == T::one() {
        return Err(Error::ZetaPole);
    }
    let (n, p) = em_plan(s.re.to_f64(), s.im.to_f64(), 0.0, T::working_digits());
    let pw = inverse_powers(s, 1, n);
    let mut acc = Complex::<T>::zero();
    for v in &pw[..n - 1] {
        acc = acc + v.clone();
    }
    Ok(acc + em_tail(s, &T::from_i64(n as i64), &pw[n - 1], p))
}

/// `ζ(s)` through the functional equation
/// `ζ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s) ζ(1-s)`.
pub fn zeta_fe<T: RealScalar>(s: &Complex<T>) -> Result<Complex<T>> {
    let one = Complex::<T>::one();
    let w = one.clone() - s.clone();
    if w.im.is_zero() && w.re == T::one() {
        return Ok(Complex::new(-T::one().div_i64(2), T::zero()));
    }
    let z1 = zeta_em(&w)?;
    let sin = cplx::sin_pi(&s.clone().div_i64(2));
    if sin.is_zero() {
        return Ok(Complex::zero());
    }
    let two = Complex::new(T::from_i64(2), T::zero());
    let pi = Complex::new(T::pi(), T::zero());
    let f = cplx::pow(&two, s) * cplx::pow(&pi, &(s.clone() - one)) * sin * gamma(&w)?;
    Ok(f * z1)
}

/// Riemann zeta function; fails only at `s = 1`.
pub fn zeta<T: RealScalar>(s: &Complex<T>) -> Result<Complex<T>> {
    if s.re >= T::one().div_i64(2) {
        zeta_em(s)
    } else {
        zeta_fe(s)
    }
}

/// Hurwitz zeta `ζ(s, a) = Σ_{m ≥ 0} (m + a)^(-s)` for a positive integer `a`.
pub fn hurwitz_zeta<T: RealScalar>(s: &Complex<T>, a: usize) -> Result<Complex<T>> {
    if a == 0 {
        return Err(Error::Invalid("Hurwitz parameter must be positive".into()));
    }
    if s.im.is_zero() && s.re == T::one() {
        return Err(Error::ZetaPole);
    }
    let (n, p) = em_plan(s.re.to_f64(), s.im.to_f64(), a as f64, T::working_digits());
    let pw = inverse_powers(s, a, n + 1);
    let mut acc = Complex::<T>::zero();
    for v in &pw[..n] {
        acc = acc + v.clone();
    }
    Ok(acc + em_tail(s, &T::from_i64((a + n) as i64), &pw[n], p))
}

/// `ζ(s + e, a)` for each integer offset `e`, sharing one table of
/// `(m + a)^(-s)`. All offsets keep relative accuracy.
pub fn hurwitz_zeta_offsets<T: RealScalar>(s: &Complex<T>, a: usize, offsets: &[u32]) -> Result<Vec<Complex<T>>> {
    if a == 0 {
        return Err(Error::Invalid("Hurwitz parameter must be positive".into()));
    }
    let digits = T::working_digits();
    let (s_re, s_im) = (s.re.to_f64(), s.im.to_f64());
    let mut n = 0;
    for &e in offsets {
        if e == 0 && s.im.is_zero() && s.re == T::one() {
            return Err(Error::ZetaPole);
        }
        n = n.max(em_plan(s_re + e as f64, s_im, a as f64, digits).0);
    }
    let depths: Vec<usize> = loop {
        let d: Option<Vec<usize>> =
            offsets.iter().map(|&e| em_depth(s_re + e as f64, s_im, a as f64, n, digits)).collect();
        match d {
            Some(d) => break d,
            None => n = (n as f64 * 1.3).ceil() as usize + 1,
        }
    };
    let pw = inverse_powers(s, a, n + 1);
    let inv: Vec<T> = (0..=n).map(|m| T::one() / T::from_i64((a + m) as i64)).collect();
    let mut out = Vec::with_capacity(offsets.len());
    for (&e, &p) in offsets.iter().zip(&depths) {
        let se = s.clone() + T::from_i64(e as i64);
        let mut acc = Complex::<T>::zero();
        let mut last = Complex::<T>::zero();
        for (m, v) in pw.iter().enumerate() {
            let mut t = v.clone();
            if e > 0 {
                t = t * inv[m].powi(e as i32);
            }
            if m < n {
                acc = acc + t;
            } else {
                last = t;
            }
        }
        out.push(acc + em_tail(&se, &T::from_i64((a + n) as i64), &last, p));
    }
    Ok(out)
}
