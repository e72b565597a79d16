//! build_h against a big-integer weight sum, backward degrees, certificate
//! expansion and an exhaustive recomputation of the d-sequence.

use num_bigint::BigUint;
use ordsize::hbuilder::{build_h, d_sequence, expand_certificate, SubstitutionTree};
use proptest::prelude::*;

fn binom_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn primitive(t: &SubstitutionTree) -> bool {
    matches!(t, SubstitutionTree::Empty { .. } | SubstitutionTree::Clique { .. } | SubstitutionTree::F0)
}

/// Hosts are primitive; so is every leaf.
fn leaves_ok(t: &SubstitutionTree) -> bool {
    match t {
        SubstitutionTree::Host { host, children } => primitive(host) && children.iter().all(leaves_ok),
        t => primitive(t),
    }
}

/// Per prefix, the largest d_i in 0..=i−1 that keeps Σ d_j w_j ≤ f, found by trying all.
fn greedy_oracle(r: u64, m: u64, f: &BigUint) -> Vec<u64> {
    let len = (m - r + 2) as usize;
    let mut d = vec![0u64; len];
    let mut sum = BigUint::from(0u32);
    for i in 2..=len {
        let w = binom_big(m - i as u64, r - 2);
        let mut best = 0;
        for v in 0..i as u64 {
            if &sum + &w * v <= *f {
                best = v;
            }
        }
        d[i - 1] = best;
        sum += &w * best;
    }
    d
}

fn case() -> impl Strategy<Value = (usize, usize, u128)> {
    (4usize..=6, 0usize..=30, any::<u64>()).prop_map(|(r, extra, x)| {
        let m = 5 * r * r + extra;
        let total: u128 = (0..r as u128).fold(1, |acc, i| acc * (m as u128 - i) / (i + 1));
        (r, m, x as u128 % (total + 1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn build_h_properties((r, m, f) in case()) {
        let hc = build_h(r, m, f).unwrap();
        let total = binom_big(m as u64, r as u64);
        let fb = BigUint::from(f);
        // weight of pair (i, j), 0-based, is C(m − 1 − j, r − 2)
        let weight: BigUint = hc.pattern().edges().iter().map(|&(_, j)| binom_big((m - 1 - j) as u64, r as u64 - 2)).sum();
        prop_assert_eq!(&weight, &fb);
        let hw: BigUint = hc.h.edges().iter().map(|&(_, j)| binom_big((m - 1 - j) as u64, r as u64 - 2)).sum();
        let target = if hc.complemented { &total - &fb } else { fb.clone() };
        prop_assert_eq!(&hw, &target);
        prop_assert_eq!(hc.complemented, BigUint::from(2u32) * &fb > total);

        let back: Vec<u64> = (0..hc.h.n()).map(|v| (0..v).filter(|&u| hc.h.has_edge(u, v)).count() as u64).collect();
        prop_assert_eq!(&back, &hc.d.d);
        let t = u128::try_from(target).unwrap();
        prop_assert_eq!(&d_sequence(r, m, t).unwrap().d, &back);
        prop_assert_eq!(greedy_oracle(r as u64, m as u64, &BigUint::from(t)), back);

        prop_assert_eq!(expand_certificate(&hc.cert).unwrap(), hc.h.clone());
        prop_assert!(leaves_ok(&hc.cert));
        prop_assert!(hc.claims.in_range && hc.claims.all_pass());
    }
}

#[test]
fn spec_example_weight() {
    let hc = build_h(4, 80, 12345).unwrap();
    let w: BigUint = hc.pattern().edges().iter().map(|&(_, j)| binom_big(79 - j as u64, 2)).sum();
    assert_eq!(w, BigUint::from(12345u32));
}

#[test]
fn extremes() {
    for f in [0u128, 1, 2] {
        let hc = build_h(4, 80, f).unwrap();
        assert_eq!(hc.pattern().edges().len() as u128, f);
    }
    let total = 1_581_580u128;
    let hc = build_h(4, 80, total).unwrap();
    assert!(hc.complemented);
    assert_eq!(hc.h.edges().len(), 0);
}
