//! End-to-end checks of the asymptotic expansion: `A(n)`, the truncated
//! expansion of `r(n)`, `Log G(e^(-z))` by direct summation against its
//! expansion near `z = 0`, and the comparison table against exact counts.
//!
//! Large quantities are carried as natural logarithms.

use num_complex::Complex;
use num_traits::Zero;

use crate::counting::{log_r_approx, r_exact, su3_parts};
use crate::cplx;
use crate::error::{Error, Result};
use crate::saddle::{c_constants, constants, nu_coeff};
use crate::scalar::{cx, RealScalar, Ring};

/// Largest `n` for which [`compare_table`] runs the exact DP by default.
pub const EXACT_DP_LIMIT: usize = 50_000;

fn n_pow<T: RealScalar>(n: u64, p: i64, q: i64) -> T {
    T::from_i64(n as i64).powr(&T::from_ratio(p, q))
}

/// `log A(n) = A1 n^(2/5) - A2 n^(3/10) - A3 n^(1/5) - A4 n^(1/10)`.
pub fn big_a_log<T: RealScalar>(n: u64) -> T {
    assert!(n >= 1, "A(n) needs n >= 1");
    let k = constants::<T>();
    k.a1.clone() * n_pow::<T>(n, 2, 5)
        - k.a2.clone() * n_pow::<T>(n, 3, 10)
        - k.a3.clone() * n_pow::<T>(n, 1, 5)
        - k.a4.clone() * n_pow::<T>(n, 1, 10)
}

/// `Σ_(j≤L) C_j n^(-j/10)`.
pub fn partial_sum<T: RealScalar>(c: &[T], n: u64) -> T {
    let step = n_pow::<T>(n, -1, 10);
    let mut pw = T::one();
    let mut acc = T::zero();
    for cj in c {
        acc = acc + cj.clone() * pw.clone();
        pw = pw * step.clone();
    }
    acc
}

/// `log( n^(-3/5) (Σ_(j≤L) C_j n^(-j/10)) A(n) )`.
pub fn r_asymptotic_log<T: RealScalar>(n: u64, l: usize) -> Result<T> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let c = c_constants::<T>(l)?;
    let s = partial_sum(&c, n);
    if s <= T::zero() {
        return Err(Error::NotPositive);
    }
    Ok(s.ln() - T::from_i64(n as i64).ln() * T::from_ratio(3, 5) + big_a_log::<T>(n))
}

/// Smallest part size `D` with the tail `Σ_(d>D) d e^(-xd) / (1 - e^(-x))`
/// below `10^-digits`.
fn part_cutoff(x: f64, digits: u32) -> u64 {
    let target = -((digits + 5) as f64) * std::f64::consts::LN_10;
    let tail = |d: f64| (d + 1.0 / x).ln() - x * d - x.ln() - (-(-x).exp_m1()).ln();
    let mut d = 1.0f64;
    while tail(d) > target {
        d *= 1.25;
    }
    d.ceil() as u64
}

/// `Log G(e^(-z)) = -Σ_d mult(d) Log(1 - e^(-zd))`, summed until the
/// remaining parts are below the working precision.
pub fn log_g_direct<T: RealScalar>(z: &Complex<T>) -> Result<Complex<T>> {
    let x = z.re.to_f64();
    if x <= 0.0 || z.re <= T::zero() {
        return Err(Error::NonPositiveRe);
    }
    let cutoff = part_cutoff(x, T::working_digits());
    let one = Complex::<T>::new(T::one(), T::zero());
    let real = z.im.is_zero();
    let mut acc = Complex::<T>::zero();
    for (d, mult) in su3_parts(cutoff).entries {
        let dz = z.clone() * T::from_i64(d as i64);
        let term = if real {
            cx((T::one() - (-dz.re).exp()).ln())
        } else {
            cplx::ln(&(one.clone() - cplx::exp(&(-dz))))
        };
        acc = acc - term * T::from_i64(mult as i64);
    }
    Ok(acc)
}

/// `3·2^(2/3) X^(10/3) z^(-2/3) - √2 Y z^(-1/2) - (1/3) Log z + (1/3) log(16π³)
/// + z^(1/2) Σ_(m<terms) ν_m z^m`.
pub fn log_g_expansion<T: RealScalar>(z: &Complex<T>, terms: usize) -> Complex<T> {
    let k = constants::<T>();
    let lz = cplx::ln(z);
    let zp = |p: i64, q: i64| cplx::exp(&(lz.clone() * T::from_ratio(p, q)));
    let two = T::from_i64(2);
    let lead = two.powr(&T::from_ratio(2, 3)) * T::from_i64(3) * k.x.powr(&T::from_ratio(10, 3));
    let pi = T::pi();
    let konst = (pi.clone() * pi.clone() * pi * T::from_i64(16)).ln().div_i64(3);
    let mut acc = zp(-2, 3) * lead - zp(-1, 2) * (two.sqrt() * k.y.clone()) - lz.clone().div_i64(3) + cx(konst);
    let half = zp(1, 2);
    let mut zm = Complex::new(T::one(), T::zero());
    let mut sum = Complex::<T>::zero();
    for m in 0..terms {
        sum = sum + zm.clone() * nu_coeff::<T>(m as u32);
        zm = zm * z.clone();
    }
    acc = acc + half * sum;
    acc
}

/// Whether `eta` lies in the excluded set (`η ≤ 1/2` or `η` a half-integer).
pub fn eta_excluded(eta: f64) -> bool {
    let f = eta - 0.5;
    !eta.is_finite() || f <= 0.0 || (f - f.round()).abs() < 1e-12
}

/// Number of `ν_m` terms (`m < η - 1/2`) for this `η`.
pub fn eta_terms(eta: f64) -> usize {
    ((eta - 0.5).ceil()).max(0.0) as usize
}

/// `|Log G(e^(-z)) - expansion with all m < η - 1/2|` for `z` in the
/// cone `|Arg z| ≤ π/4`.
pub fn expansion_residual<T: RealScalar>(z: &Complex<T>, eta: f64) -> Result<T> {
    if eta_excluded(eta) {
        return Err(Error::EtaExcluded(eta));
    }
    let (re, im) = (z.re.to_f64(), z.im.to_f64());
    if re <= 0.0 || im.abs() > re * (1.0 + 1e-12) {
        return Err(Error::Invalid(format!("z = {re}{im:+}i is outside the cone |Arg z| <= pi/4")));
    }
    let direct = log_g_direct(z)?;
    let approx = log_g_expansion(z, eta_terms(eta));
    Ok(cplx::abs(&(direct - approx)))
}

#[derive(Clone, Debug)]
pub struct ComparisonRow<T> {
    pub n: u64,
    pub l: usize,
    pub log_r_exact: T,
    /// False when `log_r_exact` came from the floating-point DP.
    pub exact: bool,
    pub log_r_asym: T,
    /// `r(n) / r_asym(n)`.
    pub ratio: f64,
    /// `R_L(n) = r(n) n^(3/5) / A(n) - Σ_(j≤L) C_j n^(-j/10)`.
    pub residual_scaled: T,
}

#[derive(Clone, Debug)]
pub struct ComparisonTable<T> {
    /// Ordered by `n`, then `L`.
    pub rows: Vec<ComparisonRow<T>>,
    /// Least-squares slope of `log|R_L|` against `log n`, per `L`;
    /// `None` with fewer than three `n`.
    pub exponents: Vec<Option<f64>>,
}

impl<T: RealScalar> ComparisonTable<T> {
    pub fn row(&self, n: u64, l: usize) -> Option<&ComparisonRow<T>> {
        self.rows.iter().find(|r| r.n == n && r.l == l)
    }
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() < 3 || xs.len() != ys.len() {
        return None;
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Natural log of `r(n)` for each `n`, exact up to [`EXACT_DP_LIMIT`]
/// and from the floating-point DP beyond it when `approximate` is set.
fn log_r_values<T: RealScalar>(ns: &[u64], approximate: bool) -> Result<Vec<(T, bool)>> {
    let nmax = ns.iter().copied().max().unwrap_or(0) as usize;
    if nmax > EXACT_DP_LIMIT && !approximate {
        return Err(Error::Invalid(format!(
            "n = {nmax} exceeds the exact limit {EXACT_DP_LIMIT}; request approximate mode"
        )));
    }
    let exact_max = nmax.min(EXACT_DP_LIMIT);
    let exact = r_exact(exact_max);
    let approx = if nmax > EXACT_DP_LIMIT { log_r_approx(nmax) } else { Vec::new() };
    Ok(ns
        .iter()
        .map(|&n| {
            let n = n as usize;
            if n <= exact_max {
                let v = T::from_bigint(&exact.get(n).clone().into());
                (v.ln(), true)
            } else {
                (T::from_f64(approx[n]), false)
            }
        })
        .collect())
}

/// Exact against asymptotic values for every `n` in `n_list` and every
/// `L ≤ l_max`, with the fitted decay exponent of `|R_L|`.
pub fn compare_table<T: RealScalar>(n_list: &[u64], l_max: usize, approximate: bool) -> Result<ComparisonTable<T>> {
    let mut ns = n_list.to_vec();
    ns.sort_unstable();
    ns.dedup();
    if ns.first() == Some(&0) {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let c = c_constants::<T>(l_max)?;
    let logs = log_r_values::<T>(&ns, approximate)?;
    let mut rows = Vec::new();
    for (&n, (lr, exact)) in ns.iter().zip(logs) {
        let nn = T::from_i64(n as i64);
        let scaled = (lr.clone() + nn.ln() * T::from_ratio(3, 5) - big_a_log::<T>(n)).exp();
        for l in 0..=l_max {
            let s = partial_sum(&c[..=l], n);
            let log_asym = if s > T::zero() {
                s.clone().ln() - nn.ln() * T::from_ratio(3, 5) + big_a_log::<T>(n)
            } else {
                return Err(Error::NotPositive);
            };
            rows.push(ComparisonRow {
                n,
                l,
                log_r_exact: lr.clone(),
                exact,
                log_r_asym: log_asym.clone(),
                ratio: (lr.clone() - log_asym).to_f64().exp(),
                residual_scaled: scaled.clone() - s,
            });
        }
    }
    let xs: Vec<f64> = ns.iter().map(|&n| (n as f64).ln()).collect();
    let exponents = (0..=l_max)
        .map(|l| {
            let ys: Vec<f64> = ns
                .iter()
                .map(|&n| {
                    let r = rows.iter().find(|r| r.n == n && r.l == l).expect("row");
                    r.residual_scaled.abs().to_f64().ln()
                })
                .collect();
            fit_slope(&xs, &ys)
        })
        .collect();
    Ok(ComparisonTable { rows, exponents })
}
