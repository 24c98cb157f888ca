use num_bigint::BigUint;
use proptest::prelude::*;
use su3asym::counting::{
    euler_product_coeffs, hardy_ramanujan, ln_biguint, log_r_approx, p_sanity, r_exact, r_oracle, su3_parts,
    PartMultiset,
};

fn as_u64(s: &su3asym::counting::BigCoeffSeries) -> Vec<u64> {
    s.coeffs.iter().map(|c| u64::try_from(c.clone()).unwrap()).collect()
}

/// Number of partitions of `n` with parts from `parts` (each part size
/// carrying `mult` distinguishable colours), by plain recursion.
fn brute(n: u64, parts: &[u64]) -> u64 {
    fn go(n: u64, parts: &[u64]) -> u64 {
        if n == 0 {
            return 1;
        }
        match parts.split_first() {
            None => 0,
            Some((&d, rest)) => {
                let mut total = 0;
                let mut k = 0;
                while k * d <= n {
                    total += go(n - k * d, rest);
                    k += 1;
                }
                total
            }
        }
    }
    go(n, parts)
}

fn coloured(parts: &PartMultiset) -> Vec<u64> {
    parts.entries.iter().flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize)).collect()
}

#[test]
fn parts_up_to_three() {
    assert_eq!(su3_parts(3).entries, vec![(1, 1), (3, 2)]);
}

#[test]
fn parts_up_to_eight() {
    assert_eq!(su3_parts(8).entries, vec![(1, 1), (3, 2), (6, 2), (8, 1)]);
}

#[test]
fn first_counts() {
    assert_eq!(as_u64(&r_exact(7)), vec![1, 1, 1, 3, 3, 3, 8, 8]);
}

#[test]
fn partition_numbers() {
    assert_eq!(as_u64(&p_sanity(10)), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    let p100 = p_sanity(100);
    assert_eq!(p100.get(100), &BigUint::from(190_569_292u64));
    let ratio = p100.get(100).clone();
    let r = ratio.to_string().parse::<f64>().unwrap() / hardy_ramanujan(100.0);
    assert!((r - 1.0).abs() < 0.05, "p(100)/HR = {r}");
}

#[test]
fn partitions_match_brute_force() {
    let p = p_sanity(30);
    let parts: Vec<u64> = (1..=30).collect();
    for n in 0..=30 {
        assert_eq!(p.get(n as usize), &BigUint::from(brute(n, &parts)));
    }
}

#[test]
fn su3_counts_match_brute_force() {
    let n_max = 40;
    let r = r_exact(n_max);
    let parts = coloured(&su3_parts(n_max as u64));
    for n in 0..=n_max {
        assert_eq!(r.get(n), &BigUint::from(brute(n as u64, &parts)), "n = {n}");
    }
}

#[test]
fn dp_equals_log_exp_at_200() {
    assert_eq!(r_exact(200), r_oracle(200).unwrap());
}

#[test]
fn nondecreasing_to_2000() {
    assert!(r_exact(2000).is_nondecreasing());
}

#[test]
fn growth_ratio_climbs_toward_a1() {
    // log r(n) / n^(2/5) tends to A1 from below, slowly: the n^(3/10) term
    // still removes a third of the leading exponent at n = 20000
    let a1 = 6.858260476163126;
    let r = r_exact(20000);
    let mut prev = 0.0;
    for n in (500..=20000).step_by(500) {
        let v = ln_biguint(r.get(n)) / (n as f64).powf(0.4);
        assert!(v > prev && (3.0..a1).contains(&v), "n = {n}: {v}");
        prev = v;
    }
    assert!(prev > 4.4);
}

#[test]
fn approximate_log_dp_close_to_exact() {
    let r = r_exact(3000);
    let a = log_r_approx(3000);
    for n in [1000usize, 2000, 3000] {
        let l = ln_biguint(r.get(n));
        assert!((a[n] - l).abs() / l < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dp_matches_log_exp_for_small_n(n in 1usize..=200) {
        prop_assert_eq!(r_exact(n), r_oracle(n).unwrap());
    }

    #[test]
    fn arbitrary_multisets(raw in proptest::collection::vec((1u64..12, 1u64..4), 1..5), n in 1usize..30) {
        let mut m = std::collections::BTreeMap::new();
        for (d, k) in raw {
            *m.entry(d).or_insert(0) += k;
        }
        let parts = PartMultiset { entries: m.into_iter().collect() };
        let dp = euler_product_coeffs(&parts, n);
        let col = coloured(&parts);
        for k in 0..=n {
            prop_assert_eq!(dp.get(k), &BigUint::from(brute(k as u64, &col)));
        }
    }
}

