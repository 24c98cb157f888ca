//! Arbitrary-precision real numbers with a thread-local working precision.
//!
//! Precision is counted in significant decimal digits. Every arithmetic
//! result is rounded to the precision active on the calling thread, so a
//! computation runs at one precision unless it switches explicitly through
//! [`with_digits`] or [`PrecisionGuard`].

use std::cell::{Cell, RefCell};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;

/// Smallest precision accepted by the context.
pub const MIN_DIGITS: u32 = 16;

const GUARD_BITS: usize = 16;

fn env_digits() -> u32 {
    std::env::var("RN_PREC")
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .map(|d| d.max(MIN_DIGITS))
        .unwrap_or(DEFAULT_DIGITS)
}

fn bits_for(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS
}

thread_local! {
    static DIGITS: Cell<u32> = Cell::new(env_digits());
    static BITS: Cell<usize> = Cell::new(bits_for(env_digits()));
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

/// Working precision of the current thread in decimal digits.
pub fn digits() -> u32 {
    DIGITS.with(|d| d.get())
}

/// Binary precision backing [`digits`].
pub fn bits() -> usize {
    BITS.with(|b| b.get())
}

/// Precision the process starts with: `RN_PREC` if set, otherwise 60.
pub fn default_digits() -> u32 {
    env_digits()
}

/// Sets the working precision of the current thread.
pub fn set_digits(d: u32) {
    let d = d.max(MIN_DIGITS);
    DIGITS.with(|c| c.set(d));
    BITS.with(|c| c.set(bits_for(d)));
}

/// Restores the previous precision when dropped.
#[must_use]
pub struct PrecisionGuard {
    prev: u32,
}

impl PrecisionGuard {
    pub fn new(d: u32) -> Self {
        let prev = digits();
        set_digits(d);
        PrecisionGuard { prev }
    }
}

impl Drop for PrecisionGuard {
    fn drop(&mut self) {
        set_digits(self.prev);
    }
}

/// Runs `f` at precision `d`.
pub fn with_digits<R>(d: u32, f: impl FnOnce() -> R) -> R {
    let _g = PrecisionGuard::new(d);
    f()
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// A real number rounded to the thread's working precision.
#[derive(Clone)]
pub struct Real(BigFloat);

impl Real {
    pub fn from_bigfloat(b: BigFloat) -> Self {
        Real(b)
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.0
    }

    pub fn from_f64(f: f64) -> Self {
        Real(BigFloat::from_f64(f, bits()))
    }

    pub fn from_i64(n: i64) -> Self {
        Real(BigFloat::from_i64(n, bits()))
    }

    pub fn from_u64(n: u64) -> Self {
        Real(BigFloat::from_u64(n, bits()))
    }

    /// Parses a decimal literal such as `-1.25e-3`.
    pub fn parse(s: &str) -> Option<Self> {
        let p = bits();
        let v = with_consts(|cc| BigFloat::parse(s.trim(), Radix::Dec, p, RM, cc));
        if v.is_nan() {
            None
        } else {
            Some(Real(v))
        }
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        if n.is_zero() {
            return Real::zero();
        }
        let (sign, words) = n.to_u64_digits();
        let words: Vec<Word> = words.into_iter().map(|w| w as Word).collect();
        let e = (words.len() * 64) as i32;
        let s = if sign == BigSign::Minus { Sign::Neg } else { Sign::Pos };
        let mut b = BigFloat::from_words(&words, s, e);
        let _ = b.set_precision(bits(), RM);
        Real(b)
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Real::from_bigint(q.numer()) / Real::from_bigint(q.denom())
    }

    pub fn pi() -> Self {
        let p = bits();
        Real(with_consts(|cc| cc.pi(p, RM)))
    }

    pub fn ln2() -> Self {
        let p = bits();
        Real(with_consts(|cc| cc.ln_2(p, RM)))
    }

    pub fn exp(&self) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.exp(p, RM, cc)))
    }

    pub fn ln(&self) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.ln(p, RM, cc)))
    }

    pub fn sin(&self) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.cos(p, RM, cc)))
    }

    pub fn atan(&self) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.atan(p, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(bits(), RM))
    }

    /// `self^e` for `self > 0`.
    pub fn powf(&self, e: &Real) -> Self {
        let p = bits();
        Real(with_consts(|cc| self.0.pow(&e.0, p, RM, cc)))
    }

    pub fn powi(&self, n: i32) -> Self {
        let r = Real(self.0.powi(n.unsigned_abs() as usize, bits(), RM));
        if n < 0 {
            Real::one() / r
        } else {
            r
        }
    }

    pub fn abs(&self) -> Self {
        Real(self.0.abs())
    }

    pub fn floor(&self) -> Self {
        Real(self.0.floor())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Rounds the stored mantissa to `d` decimal digits.
    pub fn round_to_digits(&self, d: u32) -> Self {
        let mut b = self.0.clone();
        let _ = b.set_precision(bits_for(d), RM);
        Real(b)
    }

    /// Nearest `f64`, truncated toward zero.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_nan() {
            return f64::NAN;
        }
        if self.0.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.0.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        let (m, _n, s, e, _) = match self.0.as_raw_parts() {
            Some(parts) => parts,
            None => return f64::NAN,
        };
        if self.0.is_zero() || m.is_empty() {
            return 0.0;
        }
        let hi = m[m.len() - 1] as f64;
        let lo = if m.len() > 1 { m[m.len() - 2] as f64 } else { 0.0 };
        let frac = (hi + lo / 18446744073709551616.0) / 18446744073709551616.0;
        let v = frac * 2f64.powi(e.clamp(-2000, 2000));
        if s == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Base-10 logarithm of the magnitude, as `f64`; `-inf` for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, _n, _s, e, _) = match self.0.as_raw_parts() {
            Some(parts) => parts,
            None => return f64::NAN,
        };
        let hi = m[m.len() - 1] as f64 / 18446744073709551616.0;
        hi.log10() + e as f64 * std::f64::consts::LOG10_2
    }

    /// Decimal rendering with `sig` significant digits in scientific notation.
    pub fn to_sci(&self, sig: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        if self.0.is_nan() {
            return "NaN".to_string();
        }
        let neg = self.is_negative();
        let a = self.abs();
        let mut e10 = a.log10_abs().floor() as i32;
        // scale into [10^(sig-1), 10^sig) and round to an integer
        let scaled = |e: i32| -> Real {
            let k = sig as i32 - 1 - e;
            let t = Real::from_i64(10).powi(k.abs());
            if k >= 0 {
                &a * &t
            } else {
                &a / &t
            }
        };
        let mut s = scaled(e10);
        let lim = Real::from_i64(10).powi(sig as i32);
        if s >= lim {
            e10 += 1;
            s = scaled(e10);
        } else if s < Real::from_i64(10).powi(sig as i32 - 1) {
            e10 -= 1;
            s = scaled(e10);
        }
        let half = Real::from_f64(0.5);
        let int = (&s + &half).floor();
        let mut ds = int.to_integer_string();
        if ds.len() > sig {
            ds.truncate(sig);
            e10 += 1;
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push_str(&ds[..1]);
        if ds.len() > 1 {
            out.push('.');
            out.push_str(&ds[1..]);
        }
        out.push_str(&format!("e{}", e10));
        out
    }

    /// Decimal string of an integer-valued number.
    fn to_integer_string(&self) -> String {
        let (m, _n, s, e, _) = match self.0.as_raw_parts() {
            Some(parts) => parts,
            None => return "0".into(),
        };
        if self.0.is_zero() {
            return "0".into();
        }
        let mut v = num_bigint::BigUint::zero();
        for w in m.iter().rev() {
            v = (v << 64usize) + num_bigint::BigUint::from(*w);
        }
        let total = (m.len() * 64) as i64;
        let shift = e as i64 - total;
        let v = if shift >= 0 { v << (shift as usize) } else { v >> ((-shift) as usize) };
        let mut out = v.to_string();
        if s == Sign::Neg {
            out.insert(0, '-');
        }
        out
    }

    /// Integer part as a `BigInt`, truncated toward zero.
    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_str(&Real(self.0.int()).to_integer_string()).unwrap_or_default()
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(digits() as usize);
        f.write_str(&self.to_sci(sig))
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(20))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                Real(self.0.$op(&rhs.0, bits(), RM))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
        impl $atr<&Real> for Real {
            fn $am(&mut self, rhs: &Real) {
                self.0 = self.0.$op(&rhs.0, bits(), RM);
            }
        }
        impl $atr<Real> for Real {
            fn $am(&mut self, rhs: Real) {
                self.0 = self.0.$op(&rhs.0, bits(), RM);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, add);
binop!(Sub, sub, SubAssign, sub_assign, sub);
binop!(Mul, mul, MulAssign, mul_assign, mul);
binop!(Div, div, DivAssign, div_assign, div);

impl Rem for Real {
    type Output = Real;
    fn rem(self, rhs: Real) -> Real {
        let q = Real((&self / &rhs).0.int());
        self - q * rhs
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(BigFloat::neg(&self.0))
    }
}

impl Zero for Real {
    fn zero() -> Self {
        Real(BigFloat::from_u64(0, bits()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Real {
    fn one() -> Self {
        Real(BigFloat::from_u64(1, bits()))
    }
}

impl Num for Real {
    type FromStrRadixErr = ParseRealError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ParseRealError> {
        if radix != 10 {
            return Err(ParseRealError);
        }
        Real::parse(s).ok_or(ParseRealError)
    }
}

impl FromStr for Real {
    type Err = ParseRealError;
    fn from_str(s: &str) -> Result<Self, ParseRealError> {
        Real::parse(s).ok_or(ParseRealError)
    }
}

impl ToPrimitive for Real {
    fn to_i64(&self) -> Option<i64> {
        let f = self.to_f64();
        if f.is_finite() && f.abs() < 9.0e18 {
            Some(f.trunc() as i64)
        } else {
            None
        }
    }
    fn to_u64(&self) -> Option<u64> {
        let f = self.to_f64();
        if f.is_finite() && (0.0..1.8e19).contains(&f) {
            Some(f.trunc() as u64)
        } else {
            None
        }
    }
    fn to_f64(&self) -> Option<f64> {
        Some(Real::to_f64(self))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseRealError;

impl fmt::Display for ParseRealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid decimal literal")
    }
}

impl std::error::Error for ParseRealError {}
