//! order-size invariants: spectrum mirror, weight tables, witnesses.

use ordsize::hg::{random_hypergraph, random_ordered_graph, VertexSet};
use ordsize::order_size::{find_mf_subset, size_spectrum, weighted_total, SpectrumMode, WeightFrame, DEFAULT_SPECTRUM_CAP};
use ordsize::Budget;
use proptest::prelude::*;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn for_each_rset(m: usize, r: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(m: usize, r: usize, from: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        for v in from..m {
            cur.push(v);
            rec(m, r, v + 1, cur, f);
            cur.pop();
        }
    }
    rec(m, r, 0, &mut Vec::new(), f);
}

#[test]
fn weight_table_counts_r_subsets() {
    for r in 2..=5 {
        for m in r..=12 {
            for k in 1..r {
                let frame = WeightFrame::new(r, m, k).unwrap();
                let len = frame.len();
                // head occupies 0..k−1, U the next len slots, the tail the rest
                let mut brute = vec![0u128; len * len];
                for_each_rset(m, r, &mut |t| {
                    let (a, b) = (t[k - 1] - (k - 1), t[k] - (k - 1));
                    brute[a * len + b] += 1;
                });
                for j in 1..len {
                    for i in 0..j {
                        assert_eq!(frame.weight(i, j), brute[i * len + j], "r={r} m={m} k={k} ({i},{j})");
                    }
                }
                assert_eq!(frame.total(), binom(m as u64, r as u64) as u128);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_mirrors_under_complement(r in 2usize..=4, n in 6usize..=13, p in 0.0f64..=1.0, seed in any::<u64>(), mi in 0usize..8) {
        let h = random_hypergraph(r, n, p, seed).unwrap();
        let m = r + mi % (n - r + 1);
        let a = size_spectrum(&h, m, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
        let b = size_spectrum(&h.complement(), m, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
        let top = binom(m as u64, r as u64);
        let mut mirrored: Vec<u64> = b.achieved.iter().map(|f| top - f).collect();
        mirrored.sort_unstable();
        prop_assert_eq!(&a.achieved, &mirrored);
        for (f, set) in &a.witnesses {
            prop_assert_eq!(set.len(), m);
            prop_assert_eq!(h.edge_count(set).unwrap(), *f);
        }
    }

    #[test]
    fn mf_witness_or_absence(n in 6usize..=12, p in 0.0f64..=1.0, seed in any::<u64>(), m in 3usize..=6, f in 0u64..=20) {
        let h = random_hypergraph(3, n, p, seed).unwrap();
        let f = f.min(binom(m as u64, 3));
        let found = find_mf_subset(&h, m, f, &Budget::unlimited(), seed).unwrap();
        let spec = size_spectrum(&h, m, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
        match found {
            Some(set) => {
                prop_assert_eq!(set.len(), m);
                prop_assert_eq!(h.edge_count(&set).unwrap(), f);
            }
            None => prop_assert!(!spec.achieved.contains(&f)),
        }
    }

    #[test]
    fn weighted_total_monotone(r in 3usize..=5, extra in 0usize..6, p in 0.0f64..=1.0, seed in any::<u64>(), k in 1usize..4, a in 0usize..64, b in 0usize..64) {
        let m = r + 2 + extra;
        let k = 1 + (k - 1) % (r - 1);
        let frame = WeightFrame::new(r, m, k).unwrap();
        let len = frame.len();
        let mut g = random_ordered_graph(len, p, seed);
        let u: Vec<usize> = (0..len).collect();
        let before = weighted_total(&g, &u, &frame).unwrap();
        let (i, j) = (a % len, b % len);
        if i != j {
            g.add_edge(i.min(j), i.max(j));
        }
        let after = weighted_total(&g, &u, &frame).unwrap();
        prop_assert!(after >= before);
        // direct sum over edges
        let direct: u128 = g.edges().iter().map(|&(x, y)| frame.weight(x, y)).sum();
        prop_assert_eq!(after, direct);
    }
}

#[test]
fn sampled_spectrum_is_subset_of_exact() {
    let h = random_hypergraph(3, 14, 0.4, 5).unwrap();
    let exact = size_spectrum(&h, 6, SpectrumMode::Exhaustive, DEFAULT_SPECTRUM_CAP).unwrap();
    let sampled = size_spectrum(&h, 6, SpectrumMode::Sampled { count: 500, seed: 1 }, DEFAULT_SPECTRUM_CAP).unwrap();
    assert!(sampled.achieved.iter().all(|f| exact.achieved.contains(f)));
    let w: &VertexSet = &sampled.witnesses[&sampled.achieved[0]];
    assert_eq!(h.edge_count(w).unwrap(), sampled.achieved[0]);
}
