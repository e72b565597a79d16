//! value-counter: zero removal, degenerate bound, the second form's DP and
//! blow-up closed forms against brute force.

use std::collections::BTreeSet;

use ordsize::structure::TypeConstants;
use ordsize::values::blowup::type_closed_form;
use ordsize::values::{
    count_values_lemma32, count_values_lemma33, f_general, f_lemma32, f_lemma33, transform_params, CubicParams,
};
use ordsize::{CubicParamsQ, Rational};
use proptest::prelude::*;

fn params(v: [i64; 5]) -> CubicParamsQ {
    CubicParams::from_ints(v)
}

/// Every multiset of positive parts summing to `n`.
fn partitions(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        partitions(n - p, p, cur, out);
        cur.pop();
    }
}

fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    partitions(n, n, &mut Vec::new(), &mut out);
    out
}

/// (Σa) Σ_{i<j} b_i b_j + (Σb) Σ_{i<j} a_i a_j, computed pairwise.
fn second_form(a: &[u64], b: &[u64]) -> u128 {
    let pairs = |v: &[u64]| -> u128 {
        let mut s = 0u128;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                s += (v[i] * v[j]) as u128;
            }
        }
        s
    };
    let sa: u128 = a.iter().map(|&x| x as u128).sum();
    let sb: u128 = b.iter().map(|&x| x as u128).sum();
    sa * pairs(b) + sb * pairs(a)
}

#[test]
fn second_form_dp_matches_partitions() {
    for m in 0..=12u64 {
        let mut vals = BTreeSet::new();
        for big_a in 0..=m {
            for a in all_partitions(big_a) {
                for b in all_partitions(m - big_a) {
                    vals.insert(second_form(&a, &b));
                    assert_eq!(f_lemma33(&a, &b), second_form(&a, &b));
                }
            }
        }
        assert_eq!(count_values_lemma33(m as usize).count, vals.len() as u64, "m = {m}");
    }
}

#[test]
fn first_form_count_matches_compositions() {
    // ordered positive compositions, values collected as exact rationals
    fn comps(left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=left {
            cur.push(p);
            comps(left - p, cur, out);
            cur.pop();
        }
    }
    for pv in [[1, 1, 0, 0, 0], [1, 0, 0, 0, 0], [2, -1, 3, 1, -2], [0, 0, 1, 0, 0]] {
        let p = params(pv);
        for m in 1..=11usize {
            let mut all = Vec::new();
            comps(m as u64, &mut Vec::new(), &mut all);
            let vals: BTreeSet<Rational> = all.iter().map(|x| f_lemma32(&p, x)).collect();
            assert_eq!(count_values_lemma32(&p, m).unwrap().count, vals.len() as u64, "{pv:?} m = {m}");
        }
    }
}

/// Σ over edges of the blow-up: x_i vertices in part i, triple types a, b, c, d.
fn blowup_direct(k: &TypeConstants, x: &[u64]) -> u128 {
    let part: Vec<usize> = x.iter().enumerate().flat_map(|(i, &xi)| std::iter::repeat_n(i, xi as usize)).collect();
    let n = part.len();
    let mut e = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let (p, q, r) = (part[i], part[j], part[l]);
                let edge = match (p == q, q == r) {
                    (true, true) => k.d,
                    (true, false) => k.b,
                    (false, true) => k.a,
                    (false, false) => k.c,
                };
                e += edge as u128;
            }
        }
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn zeros_do_not_change_values(pv in prop::array::uniform5(-3i64..=3), x in prop::collection::vec(0u64..4, 1..8)) {
        let p = params(pv);
        let m: u64 = x.iter().sum();
        let squeezed: Vec<u64> = x.iter().copied().filter(|&v| v > 0).collect();
        prop_assert_eq!(f_lemma32(&p, &x), f_lemma32(&p, &squeezed));
        let g = transform_params(&p, m);
        prop_assert_eq!(f_general(&g, m, &x), f_general(&g, m, &squeezed));
        prop_assert_eq!(f_lemma32(&p, &x), f_general(&g, m, &x));
    }

    #[test]
    fn degenerate_count_at_most_m_squared(t in -3i64..=3, d in -3i64..=3, e in -3i64..=3, m in 1usize..=14) {
        let p = params([t, t, 3 * t, d, e]);
        let c = count_values_lemma32(&p, m).unwrap().count;
        prop_assert!(c as usize <= m * m);
    }

    #[test]
    fn blowup_closed_form(bits in 0u8..16, x in prop::collection::vec(0u64..5, 1..6)) {
        let k = TypeConstants::from_bits(bits);
        prop_assert_eq!(type_closed_form(&k, &x), blowup_direct(&k, &x));
    }
}
