//! Dense polynomials in one variable, usable as series coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Ring;

/// Polynomial `Σ coeffs[k] x^k` with no trailing exact zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct XPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> XPolynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree after discarding coefficients of magnitude below `tol`.
    pub fn degree_above(&self, tol: f64) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.magnitude() > tol)
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> XPolynomial<D> {
        XPolynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.coeffs.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

impl<C: Ring> Add for XPolynomial<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Ring> Sub for XPolynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Ring> Mul for XPolynomial<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<C: Ring> Neg for XPolynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        XPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Ring> Zero for XPolynomial<C> {
    fn zero() -> Self {
        XPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Ring> One for XPolynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Ring> Ring for XPolynomial<C> {
    fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }
    fn div_i64(&self, n: i64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.div_i64(n)).collect())
    }
    fn try_inv(&self) -> Option<Self> {
        match self.coeffs.len() {
            1 => self.coeffs[0].try_inv().map(Self::constant),
            _ => None,
        }
    }
    fn magnitude(&self) -> f64 {
        self.max_magnitude()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_ops() {
        let p = XPolynomial::new(vec![1.0, 2.0]);
        let q = XPolynomial::new(vec![-1.0, 0.0, 3.0]);
        let r = p.clone() * q.clone();
        assert_eq!(r.coeffs(), &[-1.0, -2.0, 3.0, 6.0]);
        assert_eq!((p.clone() - p).degree(), None);
        assert_eq!(q.eval(&2.0), 11.0);
    }

    #[test]
    fn inverse_only_for_constants() {
        assert!(XPolynomial::new(vec![2.0]).try_inv().is_some());
        assert!(XPolynomial::new(vec![2.0, 1.0]).try_inv().is_none());
    }
}
