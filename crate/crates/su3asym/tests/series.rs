use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use su3asym::error::Error;
use su3asym::scalar::Ring;
use su3asym::series::{ps_compose_revert, ps_exp_log, ps_mul_div, ComposeRevert, ExpLog, MulDiv, PowerSeries};
use su3asym::{Rational, RationalSeries, Real, RealSeries};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

fn poly(c: &[i64], order: usize) -> RationalSeries {
    PowerSeries::from_poly(c.iter().map(|&v| q(v, 1)).collect(), order)
}

fn coeffs(s: &RationalSeries) -> Vec<Rational> {
    (0..s.order()).map(|k| s.coeff(k)).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x, 1)).collect()
}

#[test]
fn difference_of_squares() {
    let p = poly(&[1, 1], 5).mul(&poly(&[1, -1], 5));
    assert_eq!(coeffs(&p), ints(&[1, 0, -1, 0, 0]));
}

#[test]
fn geometric_series() {
    let r = ps_mul_div(&poly(&[1], 4), &poly(&[1, -1], 4), MulDiv::Divide).unwrap();
    assert_eq!(coeffs(&r), ints(&[1, 1, 1, 1]));
}

#[test]
fn product_with_repeated_factor() {
    let a = poly(&[1, -1], 6).inv().unwrap();
    let b = poly(&[1, 0, 0, -1], 6).powi(-2).unwrap();
    assert_eq!(coeffs(&a.mul(&b)), ints(&[1, 1, 1, 3, 3, 3]));
}

#[test]
fn divisor_without_inverse() {
    let z = PowerSeries::from_poly(vec![q(0, 1); 3], 3);
    assert_eq!(poly(&[1], 3).div(&z), Err(Error::NonInvertibleDivisor));
}

#[test]
fn laurent_quotient_shifts_valuation() {
    let x2 = poly(&[0, 0, 1, 1], 6);
    let r = poly(&[1, 2], 6).div(&x2).unwrap();
    assert_eq!(r.val(), -2);
    assert_eq!(r.coeff(-2), q(1, 1));
    assert_eq!(r.coeff(-1), q(1, 1));
    assert_eq!(r.coeff(0), q(-1, 1));
}

#[test]
fn mercator_series() {
    let l = ps_exp_log(&poly(&[1, 1], 4), ExpLog::Log).unwrap();
    assert_eq!(coeffs(&l), vec![q(0, 1), q(1, 1), q(-1, 2), q(1, 3)]);
}

#[test]
fn exponential_series() {
    let e = ps_exp_log(&poly(&[0, 1], 4), ExpLog::Exp).unwrap();
    assert_eq!(coeffs(&e), vec![q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
}

#[test]
fn exp_log_roundtrip_fixed() {
    let p = poly(&[1, 1, 0, 3], 8);
    let r = p.log().unwrap().exp().unwrap();
    assert_eq!(r, p);
}

#[test]
fn log_rejects_bad_constant() {
    assert_eq!(poly(&[2, 1], 4).log(), Err(Error::LogConstantTerm));
    assert_eq!(poly(&[1, 1], 4).exp(), Err(Error::ExpConstantTerm));
}

#[test]
fn binomial_power() {
    let p = poly(&[1, 1], 3).pow(&q(-2, 3)).unwrap();
    assert_eq!(coeffs(&p), vec![q(1, 1), q(-2, 3), q(5, 9)]);
}

#[test]
fn square_root_squared() {
    let r = poly(&[1, 1], 10).pow(&q(1, 2)).unwrap();
    assert_eq!(r.mul(&r), poly(&[1, 1], 10));
}

#[test]
fn inverse_square_root_coefficient() {
    // brute-force product formula for binom(-1/2, k)(-1)^k
    let mut c = q(1, 1);
    for k in 0..2 {
        c = c * (q(-1, 2) - q(k, 1)) / q(k + 1, 1) * q(-1, 1);
    }
    let r = poly(&[1, -1], 3).pow(&q(-1, 2)).unwrap();
    assert_eq!(r.coeff(2), c);
    assert_eq!(c, q(3, 8));
}

#[test]
fn compose_square() {
    let a = poly(&[0, 0, 1], 6);
    let u = poly(&[0, 1, 1], 6);
    let r = ps_compose_revert(&a, Some(&u), ComposeRevert::Compose).unwrap();
    assert_eq!(coeffs(&r), ints(&[0, 0, 1, 2, 1, 0]));
}

#[test]
fn compose_needs_positive_valuation() {
    assert_eq!(poly(&[0, 1], 4).compose(&poly(&[1, 1], 4)), Err(Error::ComposeValuation));
}

/// `[y^n] g = (1/n) [x^(n-1)] (x / a(x))^n`.
fn lagrange_revert(a: &RationalSeries) -> RationalSeries {
    let n = a.order() as usize;
    let h: Vec<Rational> = (1..n as i64).map(|k| a.coeff(k)).collect();
    let h = PowerSeries::from_poly(h, n - 1);
    let phi = h.inv().unwrap();
    let mut out = vec![q(0, 1)];
    for k in 1..n as i64 {
        let p = phi.powi(k).unwrap();
        out.push(p.coeff(k - 1) / q(k, 1));
    }
    PowerSeries::from_poly(out, n)
}

#[test]
fn catalan_reversion() {
    let a = poly(&[0, 1, -1], 5);
    let g = ps_compose_revert(&a, None, ComposeRevert::Revert).unwrap();
    assert_eq!(coeffs(&g), ints(&[0, 1, 1, 2, 5]));
    assert_eq!(g, lagrange_revert(&a));
}

#[test]
fn revert_then_compose_is_identity() {
    let a = poly(&[0, 2, 3, -1, 4], 9);
    let g = a.revert().unwrap();
    let id = g.compose(&a).unwrap();
    assert_eq!(id, PowerSeries::var(9));
    assert_eq!(g, lagrange_revert(&a));
}

#[test]
fn revert_needs_linear_term() {
    assert_eq!(poly(&[0, 0, 1], 5).revert(), Err(Error::NonInvertibleSeries));
}

#[test]
fn truncation_is_pessimistic() {
    let a = poly(&[1, 2, 3], 3);
    let b = poly(&[1, 1, 1, 1, 1], 5);
    assert_eq!(a.mul(&b).order(), 3);
    assert_eq!((&a + &b).order(), 3);
    assert_eq!(poly(&[0, 0, 1], 3).compose(&poly(&[0, 1, 1, 1], 4)).unwrap().order(), 3);
    assert_eq!(poly(&[0, 0, 1], 5).compose(&poly(&[0, 1, 1, 1], 4)).unwrap().order(), 4);
}

#[test]
fn real_pow_inverse_pair() {
    let a: RealSeries = PowerSeries::from_poly(
        vec![Real::one(), Real::from_f64(0.3), Real::from_f64(-1.7), Real::from_f64(2.25)],
        15,
    );
    let alpha = Real::from_ratio(-5, 3);
    let p = a.pow(&alpha).unwrap().mul(&a.pow(&-alpha).unwrap());
    let tol = 10f64.powi(-(su3asym::real::digits() as i32 - 10));
    for k in 0..15 {
        let want = if k == 0 { 1.0 } else { 0.0 };
        assert!((p.coeff(k).to_f64() - want).abs() < tol, "k={k}");
        let err = &p.coeff(k) - &Real::from_f64(want);
        assert!(err.is_zero() || err.abs().log10_abs() < -(su3asym::real::digits() as f64 - 10.0));
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, d)| q(p, d))
}

fn unit_series(order: usize) -> impl Strategy<Value = RationalSeries> {
    proptest::collection::vec(small_rational(), order - 1).prop_map(move |mut v| {
        v.insert(0, q(1, 1));
        PowerSeries::from_poly(v, order)
    })
}

fn invertible_map(order: usize) -> impl Strategy<Value = RationalSeries> {
    (small_rational().prop_filter("nonzero", |c| !c.is_zero()), proptest::collection::vec(small_rational(), order - 2))
        .prop_map(move |(a1, mut v)| {
            v.insert(0, a1);
            v.insert(0, q(0, 1));
            PowerSeries::from_poly(v, order)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exp_log_identity(p in unit_series(12)) {
        prop_assert_eq!(p.log().unwrap().exp().unwrap(), p);
    }

    #[test]
    fn double_reversion(p in invertible_map(12)) {
        prop_assert_eq!(p.revert().unwrap().revert().unwrap(), p);
    }

    #[test]
    fn multiplication_commutes_and_associates(a in unit_series(10), b in unit_series(12), c in unit_series(9)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn pow_composes_additively(p in unit_series(8), a in small_rational(), b in small_rational()) {
        let lhs = p.pow(&a).unwrap().mul(&p.pow(&b).unwrap());
        prop_assert_eq!(lhs, p.pow(&(a + b)).unwrap());
    }
}

#[test]
fn one_is_neutral() {
    let p = poly(&[1, 4, -2], 6);
    assert_eq!(p.mul(&RationalSeries::one(6)), p);
    assert!(Rational::one().try_inv().is_some());
}
