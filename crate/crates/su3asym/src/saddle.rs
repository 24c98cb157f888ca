//! Ingredients of the asymptotic expansion of `r(n)`: the constants, the
//! saddle-point series `S`, the coefficients `ν_m`, the Laurent expansion
//! of the main term and the polynomial ladders that produce `C_m`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::cache::memo;
use crate::error::{Error, Result};
use crate::scalar::{cx, RealScalar};
use crate::series::PowerSeries;
use crate::special::{gamma_real, zeta_real};
use crate::xpoly::XPolynomial;

/// Polynomial in `x` with complex coefficients.
pub type CPoly<T> = XPolynomial<Complex<T>>;

#[derive(Clone, Debug)]
pub struct ExpansionConstants<T> {
    pub x: T,
    pub y: T,
    pub a1: T,
    pub a2: T,
    pub a3: T,
    pub a4: T,
    pub a5: T,
    pub c0: T,
}

impl<T: RealScalar> ExpansionConstants<T> {
    /// Named values in display order.
    pub fn named(&self) -> Vec<(&'static str, T)> {
        vec![
            ("X", self.x.clone()),
            ("Y", self.y.clone()),
            ("A1", self.a1.clone()),
            ("A2", self.a2.clone()),
            ("A3", self.a3.clone()),
            ("A4", self.a4.clone()),
            ("A5", self.a5.clone()),
            ("C0", self.c0.clone()),
        ]
    }
}

fn re_zeta<T: RealScalar>(s: T) -> T {
    zeta_real(s).expect("zeta off its pole")
}

fn compute_constants<T: RealScalar>() -> ExpansionConstants<T> {
    let g13 = gamma_real(T::from_ratio(1, 3)).expect("Γ(1/3)");
    let z53 = re_zeta(T::from_ratio(5, 3));
    let x = (g13.clone() * g13 * z53).div_i64(9).powr(&T::from_ratio(3, 10));
    let y = -(T::pi().sqrt() * re_zeta(T::from_ratio(1, 2)) * re_zeta(T::from_ratio(3, 2)));
    let x2 = x.clone() * x.clone();
    let a1 = x2.clone() * T::from_i64(5);
    let a2 = y.clone() / x.clone();
    let a3 = (y.clone().powi(2) * T::from_i64(3)) / (x.clone().powi(4) * T::from_i64(80));
    let a4 = (y.clone().powi(3) * T::from_i64(11)) / (x.clone().powi(7) * T::from_i64(3200));
    let a5 = y.clone().powi(4) / (x.clone().powi(10) * T::from_i64(2560));
    let c0 = (T::pi() * T::from_i64(3)).sqrt() * T::from_i64(2) / T::from_i64(5).sqrt()
        * x.clone().powr(&T::from_ratio(1, 3))
        * (-a5.clone()).exp();
    ExpansionConstants { x, y, a1, a2, a3, a4, a5, c0 }
}

/// `X`, `Y`, `A1..A5` and `C0` at the working precision.
pub fn constants<T: RealScalar>() -> Arc<ExpansionConstants<T>> {
    memo::<_, Error>(T::working_digits(), "constants", || Ok(compute_constants::<T>())).expect("infallible")
}

/// `S(x) = Σ ρ(m) x^m` with `ρ(0) = 1`, known to `x^order`.
#[derive(Clone, Debug)]
pub struct SaddleSeries<T> {
    pub rho: Vec<T>,
    pub order: usize,
}

impl<T: RealScalar> SaddleSeries<T> {
    pub fn as_series(&self) -> PowerSeries<T> {
        PowerSeries::from_poly(self.rho.clone(), self.order + 1)
    }
}

/// `𝓕(S; x) = -2X² S^(-5/3) + (Y x / 2X) S^(-3/2) + 2X²` and its derivative in `S`.
fn saddle_equation<T: RealScalar>(s: &PowerSeries<T>, k: &ExpansionConstants<T>) -> Result<(PowerSeries<T>, PowerSeries<T>)> {
    let n = s.order() as usize;
    let x2 = k.x.clone() * k.x.clone();
    let c = k.y.clone() / (k.x.clone() * T::from_i64(2));
    let xvar = PowerSeries::<T>::var(n);
    let s53 = s.pow(&T::from_ratio(-5, 3))?;
    let s32 = s.pow(&T::from_ratio(-3, 2))?;
    let s83 = s.pow(&T::from_ratio(-8, 3))?;
    let s52 = s.pow(&T::from_ratio(-5, 2))?;
    let f = s53
        .scale(&(x2.clone() * T::from_i64(-2)))
        .add(&xvar.mul(&s32).scale(&c))
        .add(&PowerSeries::constant(x2.clone() * T::from_i64(2), n));
    let df = s83
        .scale(&(x2 * T::from_ratio(10, 3)))
        .sub(&xvar.mul(&s52).scale(&(c * T::from_ratio(3, 2))));
    Ok((f, df))
}

/// Digits needed before a saddle series of this order is trusted.
pub fn saddle_digits_needed(order: usize) -> u32 {
    order as u32
}

/// Solves `𝓕(S(x); x) = 0` for `S = 1 + O(x)` by Newton iteration on
/// power series, doubling the known order each step.
pub fn saddle_series<T: RealScalar>(order: usize) -> Result<SaddleSeries<T>> {
    let digits = T::working_digits();
    if order == 0 || saddle_digits_needed(order) > digits {
        return Err(Error::OrderTooLarge { order, digits, needed: saddle_digits_needed(order) });
    }
    let arc = memo(digits, &format!("saddle:{order}"), || saddle_newton::<T>(order))?;
    Ok((*arc).clone())
}

fn saddle_newton<T: RealScalar>(order: usize) -> Result<SaddleSeries<T>> {
    let k = constants::<T>();
    let target = order + 1;
    let mut s = PowerSeries::<T>::one(1);
    let mut known = 1;
    while known < target {
        known = (2 * known).min(target);
        let mut c = s.coeffs().to_vec();
        c.resize(known, T::zero());
        let cur = PowerSeries::from_poly(c, known);
        let (f, df) = saddle_equation(&cur, &k)?;
        let step = f.div(&df)?;
        let mut next = cur.sub(&step).truncate(known as i64).into_coeffs();
        next.resize(known, T::zero());
        next[0] = T::one();
        s = PowerSeries::from_poly(next, known);
    }
    Ok(SaddleSeries { rho: s.into_coeffs(), order })
}

/// Coefficients of `𝓕(S(x); x)` through `x^order`; all vanish for the true saddle.
pub fn saddle_residual<T: RealScalar>(s: &SaddleSeries<T>) -> Result<Vec<T>> {
    let k = constants::<T>();
    Ok(saddle_equation(&s.as_series(), &k)?.0.into_coeffs())
}

/// `ν_m = √(2π) / ((16π)³ (8⁵π⁴)^m) / (m+1) · C(2m,m) (6m+6)!/(3m+3)! ζ(m+1/2) ζ(3m+7/2)`.
pub fn nu_coeff<T: RealScalar>(m: u32) -> T {
    let mm = m as u64;
    let fact_ratio: BigInt = ((3 * mm + 4)..=(6 * mm + 6)).fold(BigInt::one(), |a, i| a * i);
    let comb: BigInt = binomial(BigInt::from(2 * mm), BigInt::from(mm));
    let pi = T::pi();
    let base = (pi.clone() * T::from_i64(16)).powi(3);
    let per = pi.clone().powi(4) * T::from_i64(32768);
    let num = (pi * T::from_i64(2)).sqrt() * T::from_bigint(&(comb * fact_ratio));
    let half = T::one().div_i64(2);
    let z1 = re_zeta(T::from_i64(m as i64) + half.clone());
    let z2 = re_zeta(T::from_i64(3 * m as i64 + 3) + half);
    num / (base * per.powi(m as i32) * T::from_i64(m as i64 + 1)) * z1 * z2
}

/// `max_{1≤m≤mmax} (|ν_m| / m^(3m))^(1/m)`, the smallest `C` with
/// `|ν_m| ≤ C^m m^(3m)` on that range, and the per-`m` values.
pub fn nu_growth_fit(mmax: u32) -> (f64, Vec<f64>) {
    let per: Vec<f64> = (1..=mmax)
        .map(|m| {
            let v: crate::Real = nu_coeff(m);
            let lg = v.abs().ln().to_f64();
            let mf = m as f64;
            ((lg - 3.0 * mf * mf.ln()) / mf).exp()
        })
        .collect();
    (per.iter().cloned().fold(0.0, f64::max), per)
}

/// Laurent expansion in `z` of
/// `z^(-4) (3X² T^(-2/3) - (Y z / X) T^(-1/2) + 2X² T)`, `T = S(z) + i x z²`.
#[derive(Clone, Debug)]
pub struct LaurentMain<T> {
    pub series: PowerSeries<CPoly<T>>,
}

impl<T: RealScalar> LaurentMain<T> {
    /// Coefficient of `z^k`, `k ≥ -4`.
    pub fn coeff(&self, k: i64) -> CPoly<T> {
        self.series.coeff(k)
    }

    /// `P_(ℓ+4)` for `ℓ = 1..=order`: the part with positive powers of `z`.
    pub fn positive_part(&self) -> Vec<CPoly<T>> {
        (1..self.series.order()).map(|l| self.coeff(l)).collect()
    }
}

fn cpoly_const<T: RealScalar>(c: T) -> CPoly<T> {
    XPolynomial::constant(cx(c))
}

/// `T(z) = S(z) + i x z²` as a series with polynomial coefficients, to order `n`.
fn saddle_shift<T: RealScalar>(n: usize) -> Result<PowerSeries<CPoly<T>>> {
    let s = saddle_series::<T>(n.max(2) - 1)?;
    let mut c: Vec<CPoly<T>> = s.rho.iter().take(n).map(|r| cpoly_const(r.clone())).collect();
    c.resize(n, CPoly::<T>::zero());
    if n > 2 {
        c[2] = c[2].clone() + XPolynomial::monomial(Complex::new(T::zero(), T::one()), 1);
    }
    Ok(PowerSeries::from_poly(c, n))
}

/// Laurent coefficients of the main term through `z^order`.
pub fn laurent_main<T: RealScalar>(order: usize) -> Result<LaurentMain<T>> {
    if order == 0 {
        return Err(Error::Invalid("order must be positive".into()));
    }
    let n = order + 5;
    let k = constants::<T>();
    let t = saddle_shift::<T>(n)?;
    let x2 = k.x.clone() * k.x.clone();
    let third = t.pow(&cpoly_const(T::from_ratio(-2, 3)))?;
    let half = t.pow(&cpoly_const(T::from_ratio(-1, 2)))?;
    let zvar = PowerSeries::<CPoly<T>>::var(n);
    let bracket = third
        .scale(&cpoly_const(x2.clone() * T::from_i64(3)))
        .sub(&zvar.mul(&half).scale(&cpoly_const(k.y.clone() / k.x.clone())))
        .add(&t.scale(&cpoly_const(x2.clone() * T::from_i64(2))));
    let mut coeffs = bracket.into_coeffs();
    coeffs.truncate(n);
    let lm = LaurentMain { series: PowerSeries::new(-4, coeffs) };
    check_laurent_head(&lm, &k);
    for l in 0..n {
        let p = lm.coeff(l as i64 - 4);
        assert!(p.degree().unwrap_or(0) <= l / 2, "deg P_{l} exceeds {}", l / 2);
    }
    Ok(lm)
}

/// The leading Laurent coefficients are `A1, -A2, -A3, -A4, -A5 - (5X²/3)x²`.
/// A mismatch means the constants or the saddle series are wrong.
fn check_laurent_head<T: RealScalar>(lm: &LaurentMain<T>, k: &ExpansionConstants<T>) {
    let dev = laurent_head_deviation(lm, k);
    let tol = 10f64.powi(-(T::working_digits() as i32) + 10);
    assert!(dev < tol, "Laurent head disagrees with the constants by {dev:e}");
}

/// Largest deviation of the `z^(-4..0)` coefficients from the constants.
pub fn laurent_head_deviation<T: RealScalar>(lm: &LaurentMain<T>, k: &ExpansionConstants<T>) -> f64 {
    let x2 = k.x.clone() * k.x.clone();
    let want: [CPoly<T>; 5] = [
        cpoly_const(k.a1.clone()),
        cpoly_const(-k.a2.clone()),
        cpoly_const(-k.a3.clone()),
        cpoly_const(-k.a4.clone()),
        XPolynomial::new(vec![cx(-k.a5.clone()), Complex::zero(), cx(-(x2 * T::from_ratio(5, 3)))]),
    ];
    want.iter()
        .enumerate()
        .map(|(i, w)| (lm.coeff(i as i64 - 4) - w.clone()).max_magnitude())
        .fold(0.0, f64::max)
}

/// The four polynomial ladders, index `m = 0..=M`.
#[derive(Clone, Debug)]
pub struct ExpansionPolys<T> {
    pub p1: Vec<CPoly<T>>,
    pub p2: Vec<CPoly<T>>,
    pub p3: Vec<CPoly<T>>,
    pub p4: Vec<CPoly<T>>,
}

/// Largest ladder index trusted at `digits`.
pub fn max_ladder_order(digits: u32) -> usize {
    (digits / 3) as usize
}

/// Largest `L` for which `C_0..C_L` are offered at `digits`.
pub fn max_c_order(digits: u32) -> usize {
    (3 * digits / 10) as usize
}

/// `P^[1..4]_m` for `m ≤ M`:
/// `P^[2] = exp(Σ_{ℓ≥1} P_(ℓ+4) z^ℓ)`, `P^[3] = T^(-1/3)`,
/// `P^[1] = exp(Σ_{6m+3 ≤ M} ν_m (2X² T)^(m+1/2) z^(6m+3))`, `P^[4] = P^[1] P^[2] P^[3]`.
pub fn expansion_polys<T: RealScalar>(m: usize) -> Result<Arc<ExpansionPolys<T>>> {
    let digits = T::working_digits();
    if m > max_ladder_order(digits) {
        return Err(Error::OrderTooLarge { order: m, digits, needed: 3 * m as u32 });
    }
    memo(digits, &format!("ladders:{m}"), || build_ladders::<T>(m))
}

fn build_ladders<T: RealScalar>(m: usize) -> Result<ExpansionPolys<T>> {
    let n = m + 1;
    let k = constants::<T>();
    let lm = laurent_main::<T>(m.max(1))?;
    let mut q = vec![CPoly::<T>::zero()];
    q.extend(lm.positive_part().into_iter().take(m));
    let p2 = PowerSeries::from_poly(q, n).exp()?;

    let t = saddle_shift::<T>(n)?;
    let p3 = t.pow(&cpoly_const(T::from_ratio(-1, 3)))?;

    let x2 = k.x.clone() * k.x.clone();
    let mut h = PowerSeries::<CPoly<T>>::from_poly(vec![], n);
    let mut j = 0u32;
    while 6 * j as usize + 3 <= m {
        let alpha = T::from_i64(j as i64) + T::one().div_i64(2);
        let coef = nu_coeff::<T>(j) * (x2.clone() * T::from_i64(2)).powr(&alpha);
        let term = t.pow(&cpoly_const(alpha))?.scale(&cpoly_const(coef)).shift(6 * j as i64 + 3).truncate(n as i64);
        h = h.add(&term);
        j += 1;
    }
    let p1 = h.truncate(n as i64).exp()?;
    let p4 = p1.mul(&p2).mul(&p3);

    let dense = |s: &PowerSeries<CPoly<T>>| -> Vec<CPoly<T>> { (0..n as i64).map(|i| s.coeff(i)).collect() };
    let out = ExpansionPolys { p1: dense(&p1), p2: dense(&p2), p3: dense(&p3), p4: dense(&p4) };
    for i in 0..n {
        let d = |p: &CPoly<T>| p.degree().unwrap_or(0);
        assert!(d(&out.p1[i]) <= i / 2, "deg P1_{i}");
        assert!(d(&out.p2[i]) <= 2 * i, "deg P2_{i}");
        assert!(d(&out.p3[i]) <= i / 2, "deg P3_{i}");
    }
    Ok(out)
}

/// `C_m = 2X^(4/3) e^(-A5) ∫ P^[4]_m(x) e^(-5X²x²/3) dx` for `m ≤ L`,
/// complex-valued before the odd moments' imaginary residue is dropped.
pub fn c_constants_complex<T: RealScalar>(l: usize) -> Result<Vec<Complex<T>>> {
    let digits = T::working_digits();
    if l > max_c_order(digits) {
        return Err(Error::OrderTooLarge { order: l, digits, needed: (10 * l as u32).div_ceil(3) });
    }
    let polys = expansion_polys::<T>(l)?;
    let k = constants::<T>();
    let b = k.x.clone() * k.x.clone() * T::from_ratio(5, 3);
    let pre = k.x.clone().powr(&T::from_ratio(4, 3)) * T::from_i64(2) * (-k.a5.clone()).exp();
    let maxdeg = polys.p4.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    // moments Γ(j + 1/2) / b^(j + 1/2) of x^(2j)
    let mut moments = Vec::new();
    let mut g = T::pi().sqrt();
    let mut bp = b.clone().sqrt();
    for j in 0..=maxdeg / 2 {
        moments.push(g.clone() / bp.clone());
        g = g * (T::from_i64(j as i64) + T::one().div_i64(2));
        bp = bp * b.clone();
    }
    Ok(polys
        .p4
        .iter()
        .map(|p| {
            let mut acc = Complex::<T>::zero();
            for (i, c) in p.coeffs().iter().enumerate().step_by(2) {
                acc = acc + c.clone() * moments[i / 2].clone();
            }
            acc * pre.clone()
        })
        .collect())
}

/// `C_0..C_L`.
pub fn c_constants<T: RealScalar>(l: usize) -> Result<Vec<T>> {
    Ok(c_constants_complex::<T>(l)?.into_iter().map(|c| c.re).collect())
}

impl<T: RealScalar> ExpansionPolys<T> {
    pub fn order(&self) -> usize {
        self.p4.len() - 1
    }
}

