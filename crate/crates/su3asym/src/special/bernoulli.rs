//! Bernoulli numbers `B_2k`, exact and per-precision caches.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::RealScalar;

/// Tangent numbers `T_1..T_n` (tan x = Σ T_k x^(2k-1)/(2k-1)!).
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    t
}

/// `B_0, B_2, ..., B_2n` exactly.
pub fn bernoulli_even_exact(n: usize) -> Vec<BigRational> {
    let t = tangent_numbers(n);
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigRational::one());
    for (k, tk) in t.iter().enumerate().skip(1) {
        let four_k = BigInt::one() << (2 * k);
        let den = &four_k * (&four_k - BigInt::one());
        let num = tk * BigInt::from(2 * k);
        let b = BigRational::new(num, den);
        out.push(if k % 2 == 1 { b } else { -b });
    }
    out
}

fn exact_cache() -> &'static RwLock<Vec<BigRational>> {
    static CACHE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(Vec::new()))
}

/// `B_2k` for `k = 0..=n`, computed once and shared.
pub fn bernoulli_even(n: usize) -> Vec<BigRational> {
    {
        let c = exact_cache().read().expect("bernoulli cache");
        if c.len() > n {
            return c[..=n].to_vec();
        }
    }
    let mut c = exact_cache().write().expect("bernoulli cache");
    if c.len() <= n {
        let target = (n + 1).max(2 * c.len()).max(64);
        *c = bernoulli_even_exact(target);
    }
    c[..=n].to_vec()
}

type Converted = HashMap<(TypeId, u32), Arc<dyn Any + Send + Sync>>;

fn converted_cache() -> &'static RwLock<Converted> {
    static CACHE: OnceLock<RwLock<Converted>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `B_2k` for `k = 0..=n` rounded to the working precision of `T`,
/// cached per precision level.
pub fn bernoulli_scalars<T: RealScalar>(n: usize) -> Arc<Vec<T>> {
    let key = (TypeId::of::<T>(), T::working_digits());
    if let Some(v) = converted_cache().read().expect("bernoulli cache").get(&key) {
        if let Some(v) = v.clone().downcast::<Vec<T>>().ok().filter(|v| v.len() > n) {
            return v;
        }
    }
    let len = (n + 1).max(64).next_power_of_two();
    let v: Arc<Vec<T>> = Arc::new(bernoulli_even(len - 1).iter().map(T::from_rational).collect());
    converted_cache()
        .write()
        .expect("bernoulli cache")
        .insert(key, v.clone() as Arc<dyn Any + Send + Sync>);
    v
}
