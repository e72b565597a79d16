//! Search witnesses re-checked by direct edge queries.

use ordsize::hg::{random_hypergraph, random_ordered_graph, Hypergraph};
use ordsize::search::{find_stars, greedy_forward_clique, max_homogeneous, spencer_independent, HomKind};
use ordsize::Budget;
use proptest::prelude::*;

fn r_subsets(set: &[usize], r: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, from: usize) {
    if cur.len() == r {
        out.push(cur.clone());
        return;
    }
    for i in from..set.len() {
        cur.push(set[i]);
        r_subsets(set, r, out, cur, i + 1);
        cur.pop();
    }
}

fn all_r_subsets(set: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    r_subsets(set, r, &mut out, &mut Vec::new(), 0);
    out
}

fn homogeneous(h: &Hypergraph, set: &[usize], edge: bool) -> bool {
    all_r_subsets(set, h.r()).iter().all(|t| h.has_edge(t) == edge)
}

/// Largest clique and independent set by trying every vertex subset.
fn brute_homogeneous(h: &Hypergraph) -> usize {
    let n = h.n();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        if set.len() > best && (homogeneous(h, &set, true) || homogeneous(h, &set, false)) {
            best = set.len();
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_homogeneous_is_optimal(n in 4usize..=10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let h = random_hypergraph(3, n, p, seed).unwrap();
        let w = max_homogeneous(&h, 12);
        prop_assert!(w.exact);
        prop_assert!(homogeneous(&h, w.set.as_slice(), w.kind == HomKind::Clique));
        prop_assert_eq!(w.set.len(), brute_homogeneous(&h));
    }

    #[test]
    fn heuristic_homogeneous_still_valid(n in 14usize..=30, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let h = random_hypergraph(3, n, p, seed).unwrap();
        let w = max_homogeneous(&h, 0);
        prop_assert!(homogeneous(&h, w.set.as_slice(), w.kind == HomKind::Clique));
    }

    #[test]
    fn spencer_set_is_independent(r in 2usize..=4, n in 5usize..=25, p in 0.0f64..=1.0, seed in any::<u64>(), s2 in any::<u64>()) {
        let h = random_hypergraph(r, n, p, seed).unwrap();
        let res = spencer_independent(&h, 8, s2);
        prop_assert!(homogeneous(&h, res.set.as_slice(), false));
    }

    #[test]
    fn greedy_forward_is_clique(n in 1usize..=40, p in 0.0f64..=1.0, seed in any::<u64>(), k in 1usize..6) {
        let g = random_ordered_graph(n, p, seed);
        let c = greedy_forward_clique(&g, k);
        let v = c.clique.as_slice();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                prop_assert!(g.has_edge(v[i], v[j]));
            }
        }
        if c.bound_holds {
            prop_assert!(v.len() >= c.guaranteed);
        }
    }

    #[test]
    fn stars_satisfy_definition(n in 5usize..=12, p in 0.0f64..=1.0, seed in any::<u64>(), s in 2usize..=3, induced: bool, anti: bool) {
        let h = random_hypergraph(3, n, p, seed).unwrap();
        let found = find_stars(&h, s, induced, anti, &Budget::unlimited()).unwrap();
        prop_assert!(found.complete);
        let want = !anti;
        let mut count = 0;
        for st in &found.stars {
            let leaves = st.leaves.as_slice();
            prop_assert_eq!(leaves.len(), s);
            prop_assert!(!leaves.contains(&st.center));
            for pair in all_r_subsets(leaves, 2) {
                prop_assert_eq!(h.has_edge_unordered(&[st.center, pair[0], pair[1]]), want);
            }
            if induced {
                prop_assert!(homogeneous(&h, leaves, anti));
            }
            count += 1;
        }
        // exhaustive count of (v, S) pairs meeting the same conditions
        let mut brute = 0;
        for v in 0..n {
            let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            for leaves in all_r_subsets(&others, s) {
                let star = all_r_subsets(&leaves, 2).iter().all(|q| h.has_edge_unordered(&[v, q[0], q[1]]) == want);
                if star && (!induced || homogeneous(&h, &leaves, anti)) {
                    brute += 1;
                }
            }
        }
        prop_assert_eq!(count, brute);
    }
}
