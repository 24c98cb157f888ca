//! Exact coefficients of Euler products `Π_d (1 - q^d)^(-mult(d))`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Part sizes with multiplicities, sorted by size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartMultiset {
    pub entries: Vec<(u64, u64)>,
}

impl PartMultiset {
    /// Number of parts counted with multiplicity.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.1).sum()
    }
}

/// Coefficients `c(0..=N)` of a power series with nonnegative integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigCoeffSeries {
    pub coeffs: Vec<BigUint>,
}

impl BigCoeffSeries {
    pub fn get(&self, n: usize) -> &BigUint {
        &self.coeffs[n]
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.coeffs.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Dimension of the irreducible representation with highest weight `(j-1, k-1)`.
pub fn su3_dim(j: u64, k: u64) -> u64 {
    j * k * (j + k) / 2
}

/// All SU(3) dimensions `≤ n_max` with the number of `(j, k)` realising each.
pub fn su3_parts(n_max: u64) -> PartMultiset {
    let mut m: BTreeMap<u64, u64> = BTreeMap::new();
    let mut j = 1;
    while su3_dim(j, 1) <= n_max {
        let mut k = 1;
        while su3_dim(j, k) <= n_max {
            *m.entry(su3_dim(j, k)).or_insert(0) += 1;
            k += 1;
        }
        j += 1;
    }
    PartMultiset { entries: m.into_iter().collect() }
}

/// Parts `1, 2, ..., n_max`, each once (ordinary partitions).
pub fn partition_parts(n_max: u64) -> PartMultiset {
    PartMultiset { entries: (1..=n_max).map(|d| (d, 1)).collect() }
}

/// Coefficients of `Π (1 - q^d)^(-mult)` up to `q^n_max`, one in-place
/// pass per factor.
pub fn euler_product_coeffs(parts: &PartMultiset, n_max: usize) -> BigCoeffSeries {
    let mut a = vec![BigUint::zero(); n_max + 1];
    a[0] = BigUint::one();
    for &(d, mult) in &parts.entries {
        let d = d as usize;
        if d == 0 || d > n_max {
            continue;
        }
        for _ in 0..mult {
            for n in d..=n_max {
                let (lo, hi) = a.split_at_mut(n);
                if !lo[n - d].is_zero() {
                    hi[0] += &lo[n - d];
                }
            }
        }
    }
    BigCoeffSeries { coeffs: a }
}

/// `r(0..=n_max)`.
pub fn r_exact(n_max: usize) -> BigCoeffSeries {
    euler_product_coeffs(&su3_parts(n_max.max(1) as u64), n_max)
}

/// Partition numbers `p(0..=n_max)` from the same engine.
pub fn p_sanity(n_max: usize) -> BigCoeffSeries {
    euler_product_coeffs(&partition_parts(n_max as u64), n_max)
}

/// Second route to the same coefficients: `exp(Σ_d mult Σ_m q^(dm)/m)`
/// in exact rationals, checked for integrality.
pub fn euler_product_logexp(parts: &PartMultiset, n_max: usize) -> Result<BigCoeffSeries> {
    let order = n_max + 1;
    let mut log = vec![BigRational::zero(); order];
    for &(d, mult) in &parts.entries {
        let d = d as usize;
        if d == 0 || d > n_max {
            continue;
        }
        let mut m = 1;
        while d * m <= n_max {
            log[d * m] += BigRational::new(BigInt::from(mult), BigInt::from(m));
            m += 1;
        }
    }
    let e = PowerSeries::from_poly(log, order).exp()?;
    let mut coeffs = Vec::with_capacity(order);
    for k in 0..order as i64 {
        let c = e.coeff(k);
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Invalid(format!("coefficient {k} is not a nonnegative integer")));
        }
        coeffs.push(c.to_integer().to_biguint().expect("nonnegative"));
    }
    Ok(BigCoeffSeries { coeffs })
}

/// `r(0..=n_max)` through [`euler_product_logexp`].
pub fn r_oracle(n_max: usize) -> Result<BigCoeffSeries> {
    euler_product_logexp(&su3_parts(n_max.max(1) as u64), n_max)
}

/// Approximate `ln r(n)` for `n ≤ n_max` by the same product carried out
/// in the log domain with `f64`. Intended for trend plots beyond the
/// exact range; relative error grows slowly with `n_max`.
pub fn log_r_approx(n_max: usize) -> Vec<f64> {
    let parts = su3_parts(n_max.max(1) as u64);
    let mut a = vec![f64::NEG_INFINITY; n_max + 1];
    a[0] = 0.0;
    for &(d, mult) in &parts.entries {
        let d = d as usize;
        for _ in 0..mult {
            for n in d..=n_max {
                let x = a[n];
                let y = a[n - d];
                if y == f64::NEG_INFINITY {
                    continue;
                }
                a[n] = if x == f64::NEG_INFINITY {
                    y
                } else if x > y {
                    x + (y - x).exp().ln_1p()
                } else {
                    y + (x - y).exp().ln_1p()
                };
            }
        }
    }
    a
}

/// Natural log of a positive big integer as `f64`.
pub fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(0.0);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Hardy–Ramanujan leading term `exp(π√(2n/3)) / (4√3 n)`.
pub fn hardy_ramanujan(n: f64) -> f64 {
    (std::f64::consts::PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * 3f64.sqrt() * n)
}
