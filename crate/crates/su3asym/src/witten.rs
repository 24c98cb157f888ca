//! The Witten zeta function of SU(3),
//! `ω(s) = Σ_{j,k ≥ 1} (j k (j+k))^(-s)`, and its meromorphic continuation.

use num_bigint::BigUint;
use num_complex::Complex;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cplx;
use crate::error::{Error, Result};
use crate::real::{self, PrecisionGuard};
use crate::scalar::{cx, Ring, RealScalar};
use crate::series::PowerSeries;
use crate::special::bernoulli::bernoulli_scalars;
use crate::special::zeta::{em_depth, em_plan, em_tail, inverse_powers};
use crate::special::{gamma, hurwitz_zeta_offsets, ln_gamma_product, pochhammer, rgamma, zeta};

/// Evaluation knobs. `None` lets the evaluator choose.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaEvalConfig {
    /// Contour shift of the continuation formula.
    pub m: Option<u32>,
    /// Trapezoid step on the vertical line.
    pub quad_step: Option<f64>,
    /// Hard truncation `|Im z| ≤ quad_tmax` of the contour.
    pub quad_tmax: Option<f64>,
    /// Rows `j` below this are summed one by one in the direct method.
    pub direct_cutoff: usize,
    /// Smallest `Re s` the direct method accepts.
    pub direct_sigma_min: f64,
}

impl Default for OmegaEvalConfig {
    fn default() -> Self {
        OmegaEvalConfig { m: None, quad_step: None, quad_tmax: None, direct_cutoff: 40, direct_sigma_min: 1.1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaMethod {
    Direct,
    Continued,
    /// Continuation at `s + ε` because `s` hits a removable collision.
    ContinuedOffset,
}

impl OmegaMethod {
    pub fn name(&self) -> &'static str {
        match self {
            OmegaMethod::Direct => "direct",
            OmegaMethod::Continued => "mb",
            OmegaMethod::ContinuedOffset => "mb+offset",
        }
    }
}

/// A value of `ω` with the method used and an error estimate.
#[derive(Clone, Debug)]
pub struct OmegaValue<T> {
    pub value: Complex<T>,
    pub method: OmegaMethod,
    pub est_error: f64,
    /// Contour shift used, for the continuation.
    pub m: Option<u32>,
}

/// `binom(-s, m)` for `m = 0..n`.
fn neg_binomials<T: RealScalar>(s: &Complex<T>, n: usize) -> Vec<Complex<T>> {
    let mut out = Vec::with_capacity(n);
    let mut c = Complex::<T>::one();
    for m in 0..n {
        out.push(c.clone());
        c = c * (-s.clone() - T::from_i64(m as i64)) / T::from_i64(m as i64 + 1);
    }
    out
}

/// Taylor coefficients of `(1 + u/a)^(-s) (1 + u/b)^(-s)` to order `n`.
fn two_factor_taylor<T: RealScalar>(bs: &[Complex<T>], a: &T, b: &T, n: usize) -> Vec<Complex<T>> {
    let (ia, ib) = (T::one() / a.clone(), T::one() / b.clone());
    let mut pa = T::one();
    let mut pb = T::one();
    let mut fa = Vec::with_capacity(n);
    let mut fb = Vec::with_capacity(n);
    for c in bs.iter().take(n) {
        fa.push(c.clone() * pa.clone());
        fb.push(c.clone() * pb.clone());
        pa = pa * ia.clone();
        pb = pb * ib.clone();
    }
    PowerSeries::from_poly(fa, n).mul(&PowerSeries::from_poly(fb, n)).into_coeffs()
}

fn check_direct<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<()> {
    let re = s.re.to_f64();
    if re < cfg.direct_sigma_min || re <= 2.0 / 3.0 {
        return Err(Error::UseContinuation { re, min: cfg.direct_sigma_min.max(2.0 / 3.0) });
    }
    Ok(())
}

/// `ω(s)` from the defining double series with Euler–Maclaurin tails.
///
/// `ω = 2^(-s) ζ(3s) + 2 Σ_j j^(-s) Σ_{k>j} (k(k+j))^(-s)`. Rows with
/// `j < J` sum `k` directly up to `2j + K0`; the remaining rows are
/// collapsed by Euler–Maclaurin in `k`, which turns them into Hurwitz
/// zeta values `ζ(3s + e, J)`.
pub fn omega_direct_eval<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<OmegaValue<T>> {
    check_direct(s, cfg)?;
    let digits = T::working_digits();
    let (sr, si) = (s.re.to_f64(), s.im.to_f64());
    let big_j = cfg.direct_cutoff.max(digits as usize / 2 + 10);
    let nb = ((digits as f64 + 6.0) * 10f64.log2()) as usize + 4 * s.norm_sqr().to_f64().sqrt() as usize + 20;
    let bs = neg_binomials(s, nb);
    let two_s = s.clone() * T::from_i64(2);
    let one = Complex::<T>::one();

    let mut k0 = 24usize;
    let p_small = loop {
        if let Some(p) = em_depth(2.0 * sr, 2.0 * si, 0.0, k0, digits + 2) {
            break p + 2;
        }
        k0 += 8;
    };
    let bern = bernoulli_scalars::<T>(p_small.max(1));
    let kmax = 3 * big_j + k0 + 2;
    let pw = cplx_inverse_powers(s, kmax);

    // rows j < J
    let mut w = Complex::<T>::zero();
    for j in 1..big_j {
        let kk = 2 * j + k0;
        let mut t = Complex::<T>::zero();
        for k in j + 1..kk {
            t = t + pw[k].clone() * pw[k + j].clone();
        }
        let fk = pw[kk].clone() * pw[kk + j].clone();
        let kr = T::from_i64(kk as i64);
        let ratio = T::from_i64(j as i64) / kr.clone();
        let mut integral = Complex::<T>::zero();
        let mut rp = T::one();
        for (m, b) in bs.iter().enumerate() {
            integral = integral + b.clone() * rp.clone() / (two_s.clone() + T::from_i64(m as i64 - 1));
            rp = rp * ratio.clone();
        }
        integral = integral * pw[kk].clone() * pw[kk].clone() * kr.clone();
        let taylor = two_factor_taylor(&bs, &kr, &T::from_i64((kk + j) as i64), 2 * p_small);
        let mut corr = Complex::<T>::zero();
        for p in 1..=p_small {
            corr = corr + taylor[2 * p - 1].clone() * bern[p].div_i64(2 * p as i64);
        }
        t = t + integral + fk.clone().div_i64(2) - fk * corr;
        w = w + pw[j].clone() * t;
    }

    // rows j ≥ J: φ(y) = (y(y+1))^(-s)
    let two = T::from_i64(2);
    let phi1 = cplx::real_pow_neg(&two, s);
    let phi_taylor: Vec<Complex<T>> =
        two_factor_taylor(&bs, &T::one(), &two, nb).into_iter().map(|c| c * phi1.clone()).collect();
    let p_large = large_row_depth(&phi_taylor, sr, big_j, digits);
    let bern = bernoulli_scalars::<T>(p_large.max(1));
    let integral_phi = phi_integral(s, &bs);
    let mut offsets = vec![0u32, 1];
    offsets.extend((1..=p_large).map(|p| 2 * p as u32));
    let three_s = s.clone() * T::from_i64(3);
    let hz = hurwitz_zeta_offsets(&(three_s.clone() - one.clone()), big_j, &offsets)?;
    let mut tail = integral_phi * hz[0].clone() - phi_taylor[0].clone().div_i64(2) * hz[1].clone();
    for p in 1..=p_large {
        tail = tail - phi_taylor[2 * p - 1].clone() * bern[p].div_i64(2 * p as i64) * hz[p + 1].clone();
    }
    w = w + tail;

    let value = cplx::real_pow_neg(&two, s) * zeta(&three_s)? + w * T::from_i64(2);
    let est = cplx::abs_f64(&value).max(1.0) * 10f64.powi(-(digits as i32) + 2);
    Ok(OmegaValue { value, method: OmegaMethod::Direct, est_error: est, m: None })
}

/// `k^(-s)` for `k = 0..=n` (index 0 unused).
fn cplx_inverse_powers<T: RealScalar>(s: &Complex<T>, n: usize) -> Vec<Complex<T>> {
    let mut v = vec![Complex::<T>::zero()];
    v.extend(crate::special::zeta::inverse_powers(s, 1, n));
    v
}

/// Euler–Maclaurin depth in `k` for the rows `j ≥ J`, from the actual
/// Taylor coefficients of `φ` at 1.
fn large_row_depth<T: RealScalar>(phi: &[Complex<T>], sr: f64, big_j: usize, digits: u32) -> usize {
    let tol = -((digits + 3) as f64) * std::f64::consts::LN_10;
    let lj = (big_j as f64).ln();
    let two_pi_ln = (2.0 * std::f64::consts::PI).ln();
    let mut lfact = 0.0; // ln (2p)!
    let mut prev = f64::INFINITY;
    for p in 1.. {
        let pp = p as f64;
        lfact += (2.0 * pp - 1.0).ln() + (2.0 * pp).ln();
        if 2 * p > phi.len() {
            return p - 1;
        }
        let lc = cplx::abs_f64(&phi[2 * p - 1]).max(1e-300).ln();
        let lt = 2f64.ln() + lfact - 2.0 * pp * two_pi_ln - (2.0 * pp).ln() + lc
            - (3.0 * sr + 2.0 * pp - 1.0) * lj
            + (1.0 + big_j as f64 / (3.0 * sr + 2.0 * pp - 2.0)).ln();
        if lt < tol {
            return p;
        }
        if lt > prev + 1.0 {
            return p - 1;
        }
        prev = prev.min(lt);
    }
    unreachable!()
}

/// `∫_1^∞ (y(y+1))^(-s) dy`: Taylor expansion about `3/2` on `[1, 2]`
/// and a binomial expansion in `1/y` beyond.
fn phi_integral<T: RealScalar>(s: &Complex<T>, bs: &[Complex<T>]) -> Complex<T> {
    let n = bs.len();
    let two_s = s.clone() * T::from_i64(2);
    let two = T::from_i64(2);
    let mut far = Complex::<T>::zero();
    let mut hp = T::one();
    for (m, b) in bs.iter().enumerate() {
        far = far + b.clone() * hp.clone() / (two_s.clone() + T::from_i64(m as i64 - 1));
        hp = hp.div_i64(2);
    }
    far = far * cplx::real_pow_neg(&two, &(two_s.clone() - T::one())) ;

    let a = T::from_ratio(3, 2);
    let b = T::from_ratio(5, 2);
    let c = two_factor_taylor(bs, &a, &b, n);
    let mut near = Complex::<T>::zero();
    let mut q = T::one().div_i64(2); // (1/2)^(i+1)
    for (i, ci) in c.iter().enumerate() {
        if i % 2 == 0 {
            near = near + ci.clone() * (q.clone() * T::from_i64(2)).div_i64(i as i64 + 1);
        }
        q = q.div_i64(2);
    }
    near = near * cplx::real_pow_neg(&a, s) * cplx::real_pow_neg(&b, s);
    near + far
}

pub fn omega_direct<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<Complex<T>> {
    omega_direct_eval(s, cfg).map(|v| v.value)
}

/// Distance to a pole below which the continuation refuses to evaluate.
pub const NEAR_POLE: f64 = 1e-6;

/// Nearest pole of `ω` (among `2/3` and `1/2 - m`) and the distance to it.
pub fn nearest_pole<T: RealScalar>(s: &Complex<T>) -> (String, f64) {
    let two_thirds = cx(T::from_ratio(2, 3));
    let d23 = cplx::abs_f64(&(s.clone() - two_thirds));
    let m = (0.5 - s.re.to_f64()).round().max(0.0) as i64;
    let half = cx(T::from_ratio(1, 2) - T::from_i64(m));
    let dh = cplx::abs_f64(&(s.clone() - half));
    if d23 <= dh {
        ("2/3".to_string(), d23)
    } else {
        (format!("1/2-{m}"), dh)
    }
}

/// Contour shift chosen when none is given.
pub fn auto_m(re: f64) -> u32 {
    let lower = (2.0 * (0.75 - re)).ceil() + 2.0;
    lower.max(2.0).max(re.ceil()) as u32
}

fn exact_integer<T: RealScalar>(s: &Complex<T>) -> Option<i64> {
    let n = cplx::near_integer(s, 0.25)?;
    if s.im.is_zero() && s.re == T::from_i64(n) {
        Some(n)
    } else {
        None
    }
}

/// `ω(s)` by the Mellin–Barnes continuation with contour shift `M`:
///
/// `Γ(2s-1)Γ(1-s)ζ(3s-1)/Γ(s) + Σ_{k<M} (-1)^k (s)_k/k! ζ(2s+k)ζ(s-k)
///  + (2πi Γ(s))^(-1) ∫_{Re z = M-1/2} Γ(s+z)Γ(-z)ζ(2s+z)ζ(s-z) dz`.
pub fn omega_continued_eval<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<OmegaValue<T>> {
    let (pole, dist) = nearest_pole(s);
    // points at exactly NEAR_POLE stay admissible despite rounding
    if dist < NEAR_POLE * (1.0 - 1e-9) {
        return Err(Error::NearPole { pole, dist });
    }
    let re = s.re.to_f64();
    let m = cfg.m.unwrap_or_else(|| auto_m(re));
    let mf = m as f64;
    if !(0.75 - mf / 2.0 < re && re < mf + 0.5) {
        return Err(Error::Strip { m: m as usize, re });
    }
    if let Some(n) = exact_integer(s) {
        return Err(Error::Collision(n));
    }
    let one = Complex::<T>::one();
    let rg = rgamma(s);
    let two_s = s.clone() * T::from_i64(2);
    let first = gamma(&(two_s.clone() - one.clone()))?
        * gamma(&(one.clone() - s.clone()))?
        * zeta(&(s.clone() * T::from_i64(3) - one.clone()))?
        * rg.clone();
    let mut sum = Complex::<T>::zero();
    let mut fact = T::one();
    for k in 0..m as usize {
        if k > 0 {
            fact = fact * T::from_i64(k as i64);
        }
        let term = pochhammer(s, k) / fact.clone()
            * zeta(&(two_s.clone() + T::from_i64(k as i64)))?
            * zeta(&(s.clone() - T::from_i64(k as i64)))?;
        sum = if k % 2 == 0 { sum + term } else { sum - term };
    }
    let (integral, q_err) = mb_integral(s, m, &rg, cfg)?;
    let value = first + sum + integral;
    let est = q_err + cplx::abs_f64(&value).max(1.0) * 10f64.powi(-(T::working_digits() as i32) + 4);
    Ok(OmegaValue { value, method: OmegaMethod::Continued, est_error: est, m: Some(m) })
}

/// The contour term, already multiplied by `1/(2πi Γ(s))`, and an error
/// estimate. Nodes run at reduced precision since the target is
/// `10^-(digits/3)`.
fn mb_integral<T: RealScalar>(
    s: &Complex<T>,
    m: u32,
    rg: &Complex<T>,
    cfg: &OmegaEvalConfig,
) -> Result<(Complex<T>, f64)> {
    let digits = T::working_digits();
    let lrg = cplx::log10_abs(rg);
    let tol_digits = digits as f64 / 3.0 + 2.0;
    // absolute target on the scaled integrand
    let tol = 10f64.powf(-tol_digits);
    if lrg == f64::NEG_INFINITY || lrg < -tol_digits - 40.0 {
        return Ok((Complex::zero(), 0.0));
    }
    let node_digits = ((tol_digits + 10.0 + lrg.max(0.0)).ceil() as u32).clamp(16, digits.max(16));
    let _g = PrecisionGuard::new(node_digits.min(real::digits()));

    let (sr, si) = (s.re.to_f64(), s.im.to_f64());
    let c = m as f64 - 0.5;
    let d = 0.5f64.min(c - 1.0 + 2.0 * sr).min(c + 1.0 - sr).min(c + sr);
    let h = cfg.quad_step.unwrap_or_else(|| {
        let need = (tol_digits + 3.0 + lrg.max(0.0)) * std::f64::consts::LN_10;
        2.0 * std::f64::consts::PI * 0.9 * d / need
    });
    let scale = rg.clone() / (T::pi() * T::from_i64(2));
    let cz = T::from_f64(c);
    let two_s = s.clone() * T::from_i64(2);
    let hr = T::from_f64(h);
    let real_s = s.im.is_zero();
    let t_min = si.abs() + 2.0;
    let t_guess = t_min + (tol_digits + 12.0 + lrg.max(0.0)) * std::f64::consts::LN_10 / std::f64::consts::PI + 4.0;
    let mut total = Complex::<T>::zero();
    let mut even = Complex::<T>::zero();
    let mut tail_est: f64 = 0.0;
    let dirs: &[i64] = if real_s { &[1] } else { &[1, -1] };
    for &dir in dirs {
        let mut nodes = ContourNodes::new(s, &two_s, &cz, &(hr.clone() * T::from_i64(dir)), cfg.quad_tmax.unwrap_or(t_guess));
        let mut small_run = 0;
        let mut n = 0usize;
        loop {
            let t = (dir * n as i64) as f64 * h;
            if let Some(tmax) = cfg.quad_tmax {
                if t.abs() > tmax {
                    break;
                }
            }
            let mut v = nodes.value()? * scale.clone();
            if n == 0 {
                if dir == -1 {
                    nodes.advance();
                    n += 1;
                    continue;
                }
            } else if real_s {
                // F(-t) = conj F(t) for real s
                v = Complex::new(v.re.clone() * T::from_i64(2), T::zero());
            }
            let mag = cplx::abs_f64(&v) * h;
            if n.is_multiple_of(2) {
                even = even + v.clone();
            }
            total = total + v;
            if t.abs() > t_min && mag < tol * 1e-3 {
                small_run += 1;
                if small_run >= 4 {
                    tail_est = tail_est.max(mag);
                    break;
                }
            } else {
                small_run = 0;
            }
            nodes.advance();
            n += 1;
            if n > 2_000_000 {
                return Err(Error::Invalid("contour quadrature did not converge".into()));
            }
        }
    }
    let th = total * hr.clone();
    let t2h = even * (hr * T::from_i64(2));
    let diff = cplx::abs_f64(&(th.clone() - t2h));
    // step halving squares a geometric error
    let q_err = diff * diff / cplx::abs_f64(&th).max(diff).max(1e-300) + tail_est;
    let q_err = q_err.max(tol);
    Ok((th, q_err))
}

/// `ζ(w0 + i n δ)` for `n = 0, 1, 2, ...`, updating the table of
/// `k^(-w)` by one multiplication per step.
struct SteppedZeta<T: RealScalar> {
    w: Complex<T>,
    delta: T,
    pw: Vec<Complex<T>>,
    step: Vec<Complex<T>>,
    p: usize,
}

impl<T: RealScalar> SteppedZeta<T> {
    fn new(w0: Complex<T>, delta: T, reach: f64) -> Self {
        let digits = T::working_digits();
        let (n, p) = em_plan(w0.re.to_f64(), w0.im.to_f64().abs() + reach, 0.0, digits);
        let pw = inverse_powers(&w0, 1, n);
        let step = inverse_powers(&Complex::new(T::zero(), delta.clone()), 1, n);
        SteppedZeta { w: w0, delta, pw, step, p }
    }

    fn value(&self) -> Complex<T> {
        let n = self.pw.len();
        let mut acc = Complex::<T>::zero();
        for v in &self.pw[..n - 1] {
            acc = acc + v.clone();
        }
        acc + em_tail(&self.w, &T::from_i64(n as i64), &self.pw[n - 1], self.p)
    }

    fn advance(&mut self) {
        for (v, st) in self.pw.iter_mut().zip(&self.step) {
            *v = v.clone() * st.clone();
        }
        self.w.im = self.w.im.clone() + self.delta.clone();
    }
}

/// Integrand `Γ(s+z)Γ(-z)ζ(2s+z)ζ(s-z)` along `z = c + i n δ`.
/// `ζ(s-z)` goes through the functional equation once `Re(s-z) < -1/4`.
struct ContourNodes<T: RealScalar> {
    s: Complex<T>,
    z: Complex<T>,
    delta: T,
    reach: f64,
    z1: SteppedZeta<T>,
    z2: SteppedZeta<T>,
    reflect: bool,
    n: usize,
}

impl<T: RealScalar> ContourNodes<T> {
    fn new(s: &Complex<T>, two_s: &Complex<T>, c: &T, delta: &T, reach: f64) -> Self {
        let z = Complex::new(c.clone(), T::zero());
        let reflect = (s.re.clone() - c.clone()).to_f64() < -0.25;
        let z1 = SteppedZeta::new(two_s.clone() + z.clone(), delta.clone(), reach);
        let z2 = if reflect {
            SteppedZeta::new(Complex::<T>::one() - s.clone() + z.clone(), delta.clone(), reach)
        } else {
            SteppedZeta::new(s.clone() - z.clone(), -delta.clone(), reach)
        };
        ContourNodes { s: s.clone(), z, delta: delta.clone(), reach, z1, z2, reflect, n: 0 }
    }

    fn value(&self) -> Result<Complex<T>> {
        let z = &self.z;
        if self.n as f64 * self.delta.abs().to_f64() > self.reach {
            let two_s = self.s.clone() * T::from_i64(2);
            return Ok(gamma(&(self.s.clone() + z.clone()))?
                * gamma(&(-z.clone()))?
                * zeta(&(two_s + z.clone()))?
                * zeta(&(self.s.clone() - z.clone()))?);
        }
        let mut args = vec![self.s.clone() + z.clone(), -z.clone()];
        let zetas = self.z1.value() * self.z2.value();
        if !self.reflect {
            return Ok(cplx::exp(&ln_gamma_product(&args)) * zetas);
        }
        // ζ(w) = 2^w π^(w-1) sin(πw/2) Γ(1-w) ζ(1-w)
        let w = self.s.clone() - z.clone();
        args.push(Complex::<T>::one() - w.clone());
        let lw = w.clone() * T::ln2() + (w.clone() - T::one()) * T::pi().ln();
        Ok(cplx::exp(&(ln_gamma_product(&args) + lw)) * cplx::sin_pi(&w.div_i64(2)) * zetas)
    }

    fn advance(&mut self) {
        self.z.im = self.z.im.clone() + self.delta.clone();
        self.z1.advance();
        self.z2.advance();
        self.n += 1;
    }
}

pub fn omega_continued<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<Complex<T>> {
    omega_continued_eval(s, cfg).map(|v| v.value)
}

/// Evaluates the continuation at `s + 10^-(digits/2)` with the working
/// precision raised by `digits/2`, so that the removable singularity
/// cancels without loss. The returned value carries the perturbation.
pub fn omega_continued_offset<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<OmegaValue<T>> {
    let digits = T::working_digits();
    let half = digits.div_ceil(2);
    let _g = PrecisionGuard::new(real::digits() + half);
    let eps = T::from_i64(10).powi(-(half as i32));
    let sp = s.clone() + eps;
    let mut v = omega_continued_eval(&sp, cfg)?;
    v.method = OmegaMethod::ContinuedOffset;
    v.est_error += 10f64.powi(-(half as i32)) * cplx::abs_f64(&v.value).max(1.0) * 10.0;
    Ok(v)
}

/// `ω(s)` anywhere off the poles: direct summation for
/// `Re s ≥ direct_sigma_min`, continuation otherwise.
pub fn omega_eval<T: RealScalar>(s: &Complex<T>, cfg: &OmegaEvalConfig) -> Result<OmegaValue<T>> {
    if s.re.to_f64() >= cfg.direct_sigma_min && s.re.to_f64() > 2.0 / 3.0 {
        return omega_direct_eval(s, cfg);
    }
    match omega_continued_eval(s, cfg) {
        Err(Error::Collision(_)) => omega_continued_offset(s, cfg),
        other => other,
    }
}

pub fn omega<T: RealScalar>(s: &Complex<T>) -> Result<Complex<T>> {
    omega_eval(s, &OmegaEvalConfig::default()).map(|v| v.value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleKind {
    TwoThirds,
    HalfMinus,
}

/// Residue of `ω` at `2/3` (`m` ignored) or at `1/2 - m`.
///
/// At `2/3` only the first continuation term is singular, through
/// `ζ(3s-1) ~ 1/(3(s-2/3))`, which gives `Γ(1/3)^3 / (2√3 π)`.
pub fn omega_residue<T: RealScalar>(kind: PoleKind, m: u32) -> Complex<T> {
    match kind {
        PoleKind::TwoThirds => {
            let g = gamma(&cx(T::from_ratio(1, 3))).expect("Γ(1/3)").re;
            let v = g.clone() * g.clone() * g / (T::from_i64(3).sqrt() * T::pi() * T::from_i64(2));
            cx(v)
        }
        PoleKind::HalfMinus => {
            let b = binomial(BigUint::from(2 * m), BigUint::from(m));
            let q = BigRational::new(b.into(), BigUint::from(16u32).pow(m).into());
            let mut c = T::from_rational(&q);
            if m % 2 == 1 {
                c = -c;
            }
            let z = zeta(&cx(T::from_ratio(1, 2) - T::from_i64(3 * m as i64))).expect("ζ off its pole");
            z * c
        }
    }
}

/// Both sides of the identity
/// `ζ(6n+2) = 2(4n+1)!/((6n+1)(2n)!^2) Σ_{k=1}^n C(2n,2k-1)/C(6n,2n+2k-1) ζ(2n+2k) ζ(4n-2k+2)`.
pub fn zeta_identity_sides<T: RealScalar>(n: u32) -> Result<(T, T)> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let n = n as u64;
    let fact = |k: u64| -> BigUint { (1..=k).fold(BigUint::one(), |a, i| a * i) };
    let pre = BigRational::new(
        (fact(4 * n + 1) * 2u32).into(),
        (fact(2 * n) * fact(2 * n) * (6 * n + 1)).into(),
    );
    let z = |x: u64| -> Result<T> { Ok(zeta(&cx(T::from_i64(x as i64)))?.re) };
    let mut rhs = T::zero();
    for k in 1..=n {
        let w = BigRational::new(
            binomial(BigUint::from(2 * n), BigUint::from(2 * k - 1)).into(),
            binomial(BigUint::from(6 * n), BigUint::from(2 * n + 2 * k - 1)).into(),
        );
        rhs = rhs + T::from_rational(&(w * pre.clone())) * z(2 * n + 2 * k)? * z(4 * n - 2 * k + 2)?;
    }
    Ok((z(6 * n + 2)?, rhs))
}

/// `|LHS - RHS| / |LHS|` for the identity of [`zeta_identity_sides`].
pub fn verify_zeta_identity<T: RealScalar>(n: u32) -> Result<T> {
    let (l, r) = zeta_identity_sides::<T>(n)?;
    Ok(((l.clone() - r) / l).abs())
}
