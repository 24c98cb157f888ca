//! Coefficient and scalar traits shared by the series engine and the special functions.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

use crate::real::{self, Real};

/// A commutative ring that contains the rationals, which is all the
/// exp/log/pow recurrences need.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Exact or rounded division by a nonzero integer.
    fn div_i64(&self, n: i64) -> Self;

    /// Multiplicative inverse when it exists.
    fn try_inv(&self) -> Option<Self>;

    /// Rough magnitude, used for tolerances and diagnostics only.
    fn magnitude(&self) -> f64;

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_i64(p).div_i64(q)
    }
}

/// A real field with the elementary transcendental functions.
pub trait RealScalar: Ring + Num + PartialOrd + Send + Sync + 'static {
    /// Decimal digits carried by the current working precision.
    fn working_digits() -> u32;
    fn from_f64(x: f64) -> Self;
    fn to_f64(&self) -> f64;
    fn from_bigint(n: &BigInt) -> Self;
    fn pi() -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn atan(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;

    fn from_rational(q: &BigRational) -> Self {
        Self::from_bigint(q.numer()) / Self::from_bigint(q.denom())
    }

    fn ln2() -> Self {
        Self::from_i64(2).ln()
    }

    /// `self^e` for positive `self`.
    fn powr(&self, e: &Self) -> Self {
        (self.ln() * e.clone()).exp()
    }

    fn powi(&self, n: i32) -> Self {
        let mut base = self.clone();
        let mut k = n.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            k >>= 1;
        }
        if n < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    fn atan2(y: &Self, x: &Self) -> Self {
        let zero = Self::zero();
        if *x > zero {
            (y.clone() / x.clone()).atan()
        } else if *x < zero {
            let a = (y.clone() / x.clone()).atan();
            if *y >= zero {
                a + Self::pi()
            } else {
                a - Self::pi()
            }
        } else if *y > zero {
            Self::pi().div_i64(2)
        } else if *y < zero {
            -Self::pi().div_i64(2)
        } else {
            zero
        }
    }

    /// Unit roundoff `10^-digits`.
    fn epsilon() -> Self {
        Self::from_i64(10).powi(-(Self::working_digits() as i32))
    }
}

macro_rules! float_scalar {
    ($t:ty, $digits:expr) => {
        impl Ring for $t {
            fn from_i64(n: i64) -> Self {
                n as $t
            }
            fn div_i64(&self, n: i64) -> Self {
                *self / n as $t
            }
            fn try_inv(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
            fn magnitude(&self) -> f64 {
                (*self as f64).abs()
            }
        }

        impl RealScalar for $t {
            fn working_digits() -> u32 {
                $digits
            }
            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn from_bigint(n: &BigInt) -> Self {
                n.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn from_rational(q: &BigRational) -> Self {
                q.to_f64().unwrap_or(f64::NAN) as $t
            }
            fn pi() -> Self {
                std::f64::consts::PI as $t
            }
            fn exp(&self) -> Self {
                <$t>::exp(*self)
            }
            fn ln(&self) -> Self {
                <$t>::ln(*self)
            }
            fn sin(&self) -> Self {
                <$t>::sin(*self)
            }
            fn cos(&self) -> Self {
                <$t>::cos(*self)
            }
            fn atan(&self) -> Self {
                <$t>::atan(*self)
            }
            fn sqrt(&self) -> Self {
                <$t>::sqrt(*self)
            }
            fn abs(&self) -> Self {
                <$t>::abs(*self)
            }
            fn powr(&self, e: &Self) -> Self {
                <$t>::powf(*self, *e)
            }
            fn atan2(y: &Self, x: &Self) -> Self {
                <$t>::atan2(*y, *x)
            }
        }
    };
}

float_scalar!(f64, 16);
float_scalar!(f32, 7);

impl Ring for Real {
    fn from_i64(n: i64) -> Self {
        Real::from_i64(n)
    }
    fn div_i64(&self, n: i64) -> Self {
        self / &Real::from_i64(n)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(&Real::one() / self)
        }
    }
    fn magnitude(&self) -> f64 {
        Real::to_f64(self).abs()
    }
}

impl RealScalar for Real {
    fn working_digits() -> u32 {
        real::digits()
    }
    fn from_f64(x: f64) -> Self {
        Real::from_f64(x)
    }
    fn to_f64(&self) -> f64 {
        Real::to_f64(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Real::from_bigint(n)
    }
    fn pi() -> Self {
        Real::pi()
    }
    fn ln2() -> Self {
        Real::ln2()
    }
    fn exp(&self) -> Self {
        Real::exp(self)
    }
    fn ln(&self) -> Self {
        Real::ln(self)
    }
    fn sin(&self) -> Self {
        Real::sin(self)
    }
    fn cos(&self) -> Self {
        Real::cos(self)
    }
    fn atan(&self) -> Self {
        Real::atan(self)
    }
    fn sqrt(&self) -> Self {
        Real::sqrt(self)
    }
    fn abs(&self) -> Self {
        Real::abs(self)
    }
    fn powr(&self, e: &Self) -> Self {
        Real::powf(self, e)
    }
    fn powi(&self, n: i32) -> Self {
        Real::powi(self, n)
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn div_i64(&self, n: i64) -> Self {
        self / BigRational::from_integer(BigInt::from(n))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().unwrap_or(f64::INFINITY).abs()
    }
}

impl<T: Ring + Num> Ring for Complex<T> {
    fn from_i64(n: i64) -> Self {
        Complex::new(T::from_i64(n), T::zero())
    }
    fn div_i64(&self, n: i64) -> Self {
        Complex::new(self.re.div_i64(n), self.im.div_i64(n))
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Complex::<T>::one() / self.clone())
        }
    }
    fn magnitude(&self) -> f64 {
        self.re.magnitude().hypot(self.im.magnitude())
    }
}

/// Embeds a real scalar as a complex number.
pub fn cx<T: RealScalar>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}
