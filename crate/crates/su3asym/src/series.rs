//! Truncated formal power series with Laurent valuation.
//!
//! A series stores the coefficients of `x^val, ..., x^(order-1)`; everything
//! from `x^order` on is unknown. Results never claim more terms than their
//! inputs determine.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<C> {
    val: i64,
    coeffs: Vec<C>,
}

fn mul_trunc<C: Ring>(a: &[C], b: &[C], n: usize) -> Vec<C> {
    let mut out = vec![C::zero(); n];
    for (i, ai) in a.iter().enumerate().take(n) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(n - i) {
            out[i + j] = out[i + j].clone() + ai.clone() * bj.clone();
        }
    }
    out
}

impl<C: Ring> PowerSeries<C> {
    /// Series `Σ coeffs[k] x^(val+k)` known up to `x^(val + coeffs.len())`.
    pub fn new(val: i64, coeffs: Vec<C>) -> Self {
        PowerSeries { val, coeffs }
    }

    /// A polynomial read as a series known to `order` (padded or cut).
    pub fn from_poly(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order, C::zero());
        PowerSeries { val: 0, coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::from_poly(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The variable `x`, known to `order`.
    pub fn var(order: usize) -> Self {
        Self::from_poly(vec![C::zero(), C::one()], order)
    }

    /// `O(x^order)`.
    pub fn zero(order: i64) -> Self {
        PowerSeries { val: order, coeffs: Vec::new() }
    }

    pub fn val(&self) -> i64 {
        self.val
    }

    pub fn order(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero below the valuation.
    ///
    /// Panics if `k` is at or beyond the truncation order.
    pub fn coeff(&self, k: i64) -> C {
        assert!(k < self.order(), "coefficient x^{k} beyond truncation order {}", self.order());
        if k < self.val {
            C::zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        if order <= self.val {
            return Self::zero(order);
        }
        PowerSeries {
            val: self.val,
            coeffs: self.coeffs[..(order - self.val) as usize].to_vec(),
        }
    }

    /// Drops exactly-zero leading coefficients.
    pub fn normalized(&self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        PowerSeries {
            val: self.val + skip as i64,
            coeffs: self.coeffs[skip..].to_vec(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        PowerSeries { val: self.val + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        PowerSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { val: self.val, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Coefficients of `x^0 .. x^(n-1)` for a series without negative powers.
    fn dense(&self, n: usize) -> Vec<C> {
        (0..n as i64).map(|k| self.coeff(k)).collect()
    }

    fn has_negative_powers(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| self.val + (i as i64) < 0 && !c.is_zero())
    }

    fn lin(&self, other: &Self, sign: bool) -> Self {
        let val = self.val.min(other.val);
        let order = self.order().min(other.order());
        let coeffs = (val..order)
            .map(|k| {
                let a = if k < self.val { C::zero() } else { self.coeff(k) };
                let b = if k < other.val { C::zero() } else { other.coeff(k) };
                if sign {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        PowerSeries { val, coeffs }
    }

    /// Product; relative precision is the smaller one after stripping
    /// known leading zeros.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.normalized();
        let b = other.normalized();
        let n = a.coeffs.len().min(b.coeffs.len());
        PowerSeries {
            val: a.val + b.val,
            coeffs: mul_trunc(&a.coeffs, &b.coeffs, n),
        }
    }

    /// Multiplicative inverse; the leading coefficient must be invertible.
    pub fn inv(&self) -> Result<Self> {
        let b = self.normalized();
        let Some(lead) = b.coeffs.first() else {
            return Err(Error::NonInvertibleDivisor);
        };
        let li = lead.try_inv().ok_or(Error::NonInvertibleDivisor)?;
        let n = b.coeffs.len();
        let mut c: Vec<C> = Vec::with_capacity(n);
        c.push(li.clone());
        for i in 1..n {
            let mut acc = C::zero();
            for k in 1..=i {
                acc = acc + b.coeffs[k].clone() * c[i - k].clone();
            }
            c.push(-(acc * li.clone()));
        }
        Ok(PowerSeries { val: -b.val, coeffs: c })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Formal exponential of a series with no terms of degree ≤ 0.
    pub fn exp(&self) -> Result<Self> {
        if self.has_negative_powers() || (self.val <= 0 && self.order() > 0 && !self.coeff(0).is_zero()) {
            return Err(Error::ExpConstantTerm);
        }
        let n = self.order().max(0) as usize;
        let a = self.dense(n);
        let mut f: Vec<C> = Vec::with_capacity(n);
        if n > 0 {
            f.push(C::one());
        }
        for m in 1..n {
            let mut acc = C::zero();
            for k in 1..=m {
                if a[k].is_zero() {
                    continue;
                }
                acc = acc + (a[k].clone() * f[m - k].clone()) * C::from_i64(k as i64);
            }
            f.push(acc.div_i64(m as i64));
        }
        Ok(PowerSeries { val: 0, coeffs: f })
    }

    fn check_unit(&self, err: Error) -> Result<Vec<C>> {
        if self.has_negative_powers() || self.order() <= 0 || self.coeff(0) != C::one() {
            return Err(err);
        }
        Ok(self.dense(self.order() as usize))
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        let a = self.check_unit(Error::LogConstantTerm)?;
        let n = a.len();
        let mut g: Vec<C> = vec![C::zero(); n];
        for m in 1..n {
            let mut acc = C::zero();
            for k in 1..m {
                if g[k].is_zero() {
                    continue;
                }
                acc = acc + (g[k].clone() * a[m - k].clone()) * C::from_i64(k as i64);
            }
            g[m] = a[m].clone() - acc.div_i64(m as i64);
        }
        Ok(PowerSeries { val: 0, coeffs: g })
    }

    /// `self^alpha` for a series with constant term 1.
    pub fn pow(&self, alpha: &C) -> Result<Self> {
        let a = self.check_unit(Error::PowConstantTerm)?;
        let n = a.len();
        let ap1 = alpha.clone() + C::one();
        let mut f: Vec<C> = Vec::with_capacity(n);
        f.push(C::one());
        for m in 1..n {
            let mut acc = C::zero();
            for k in 1..=m {
                if a[k].is_zero() {
                    continue;
                }
                let w = ap1.clone() * C::from_i64(k as i64) - C::from_i64(m as i64);
                acc = acc + w * (a[k].clone() * f[m - k].clone());
            }
            f.push(acc.div_i64(m as i64));
        }
        Ok(PowerSeries { val: 0, coeffs: f })
    }

    /// `self^n` for an integer exponent (negative needs an invertible lead).
    pub fn powi(&self, n: i64) -> Result<Self> {
        let mut base = if n < 0 { self.inv()? } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = PowerSeries::one(base.coeffs.len().max(1));
        let mut first = true;
        while k > 0 {
            if k & 1 == 1 {
                acc = if first { base.clone() } else { acc.mul(&base) };
                first = false;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Substitutes `inner` (positive valuation) for the variable.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if self.has_negative_powers() {
            return Err(Error::ComposeValuation);
        }
        let b = inner.normalized();
        if b.val < 1 && !b.coeffs.is_empty() {
            return Err(Error::ComposeValuation);
        }
        let vb = b.val.max(1);
        let na = self.order().max(0);
        let order = (na.saturating_mul(vb)).min(inner.order()).max(0) as usize;
        let bd = b.dense(order.min(b.order().max(0) as usize));
        let mut acc: Vec<C> = vec![C::zero(); order];
        for k in (0..na).rev() {
            acc = mul_trunc(&acc, &bd, order);
            if order > 0 {
                acc[0] = acc[0].clone() + self.coeff(k);
            }
        }
        Ok(PowerSeries { val: 0, coeffs: acc })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() * C::from_i64(self.val + i as i64))
            .collect();
        PowerSeries { val: self.val - 1, coeffs }
    }

    /// Compositional inverse by Newton iteration.
    pub fn revert(&self) -> Result<Self> {
        if self.has_negative_powers() || self.order() < 2 {
            return Err(Error::NonInvertibleSeries);
        }
        if !self.coeff(0).is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let a1_inv = self.coeff(1).try_inv().ok_or(Error::NonInvertibleSeries)?;
        let n = self.order();
        let da = self.derivative();
        let mut g = PowerSeries::from_poly(vec![C::zero(), a1_inv], 2.min(n as usize));
        let mut prec = 2i64;
        let mut steps = Vec::new();
        while prec < n {
            prec = (2 * prec).min(n);
            steps.push(prec);
        }
        steps.push(n);
        for p in steps {
            let gp = PowerSeries::from_poly(g.dense(g.order().min(p) as usize), p as usize);
            let y = PowerSeries::<C>::var(p as usize);
            let r = self.truncate(p).compose(&gp)?.sub(&y);
            let d = da.truncate(p - 1).compose(&gp)?;
            let step = r.div(&d)?;
            g = gp.sub(&step).truncate(p);
        }
        Ok(PowerSeries::from_poly(g.dense(n as usize), n as usize))
    }

    /// Evaluates a series without negative powers as a polynomial at `x`.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        let mut p = C::one();
        for _ in 0..self.val.max(0) {
            p = p * x.clone();
        }
        acc * p
    }

    /// Largest coefficient magnitude.
    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

impl<C: Ring> Add for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn add(self, rhs: &PowerSeries<C>) -> PowerSeries<C> {
        self.lin(rhs, true)
    }
}

impl<C: Ring> Sub for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn sub(self, rhs: &PowerSeries<C>) -> PowerSeries<C> {
        self.lin(rhs, false)
    }
}

impl<C: Ring> Mul for &PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn mul(self, rhs: &PowerSeries<C>) -> PowerSeries<C> {
        PowerSeries::mul(self, rhs)
    }
}

impl<C: Ring> Neg for PowerSeries<C> {
    type Output = PowerSeries<C>;
    fn neg(self) -> PowerSeries<C> {
        PowerSeries { val: self.val, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Ring> PowerSeries<C> {
    pub fn sub(&self, other: &Self) -> Self {
        self.lin(other, false)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.lin(other, true)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulDiv {
    Multiply,
    Divide,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpLog {
    Exp,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeRevert {
    Compose,
    Revert,
}

pub fn ps_mul_div<C: Ring>(a: &PowerSeries<C>, b: &PowerSeries<C>, mode: MulDiv) -> Result<PowerSeries<C>> {
    match mode {
        MulDiv::Multiply => Ok(a.mul(b)),
        MulDiv::Divide => a.div(b),
    }
}

pub fn ps_exp_log<C: Ring>(a: &PowerSeries<C>, mode: ExpLog) -> Result<PowerSeries<C>> {
    match mode {
        ExpLog::Exp => a.exp(),
        ExpLog::Log => a.log(),
    }
}

pub fn ps_pow_real<C: Ring>(a: &PowerSeries<C>, alpha: &C) -> Result<PowerSeries<C>> {
    a.pow(alpha)
}

/// `Compose` substitutes `b` into `a`; `Revert` ignores `b`.
pub fn ps_compose_revert<C: Ring>(
    a: &PowerSeries<C>,
    b: Option<&PowerSeries<C>>,
    mode: ComposeRevert,
) -> Result<PowerSeries<C>> {
    match mode {
        ComposeRevert::Compose => a.compose(b.ok_or_else(|| Error::Invalid("compose needs an inner series".into()))?),
        ComposeRevert::Revert => a.revert(),
    }
}
