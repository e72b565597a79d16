use fixedbitset::FixedBitSet;
use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::binom_sat;
use crate::hg::OrderedGraph;
use crate::rng;
use crate::search::cliques::{count_cliques, for_each_clique, full_set};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KttCount {
    /// exact count, or the rounded estimate when `exact` is false
    pub count: u128,
    pub exact: bool,
    pub samples: Option<u64>,
}

/// Number of independent t-sets.
pub fn count_independent_tsets(g: &OrderedGraph, t: usize) -> u128 {
    count_cliques(&g.complement(), &full_set(g.n()), t)
}

/// Vertices adjacent to every member of `a`.
fn common_neighbors(g: &OrderedGraph, a: &[usize]) -> FixedBitSet {
    let mut c = full_set(g.n());
    for &v in a {
        c.intersect_with(g.neighbors(v));
    }
    c
}

/// Unordered pairs {A, B} of disjoint independent t-sets, complete to each other.
pub fn count_induced_ktt(g: &OrderedGraph, t: usize, budget: &Budget) -> KttCount {
    let comp = g.complement();
    let mut ordered: u128 = 0;
    let finished = for_each_clique(&comp, &full_set(g.n()), t, |a| {
        if budget.spend(1).is_err() {
            return false;
        }
        ordered += count_cliques(&comp, &common_neighbors(g, a), t);
        true
    });
    if finished {
        return KttCount { count: ordered / 2, exact: true, samples: None };
    }
    // fall back to a seeded estimate over uniformly random t-sets A
    let samples = 2000u64;
    let total = binom_sat(g.n(), t) as f64;
    let mut g_rng = rng::seeded(0x006b_7474);
    let mut acc = 0f64;
    for _ in 0..samples {
        let a: Vec<usize> = {
            let mut v = sample(&mut g_rng, g.n(), t).into_vec();
            v.sort_unstable();
            v
        };
        if g.is_independent(&a) {
            acc += count_cliques(&comp, &common_neighbors(g, &a), t) as f64;
        }
    }
    let est = acc / samples as f64 * total / 2.0;
    KttCount { count: est.round() as u128, exact: false, samples: Some(samples) }
}

/// Every induced K_{t,t} as (A, B) with min A < min B, in lexicographic order.
pub fn list_induced_ktt(g: &OrderedGraph, allowed: &FixedBitSet, t: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let comp = g.complement();
    let mut out = Vec::new();
    for_each_clique(&comp, allowed, t, |a| {
        let mut cand = common_neighbors(g, a);
        cand.intersect_with(allowed);
        cand.set_range(..a[0] + 1, false);
        for_each_clique(&comp, &cand, t, |b| {
            out.push((a.to_vec(), b.to_vec()));
            true
        });
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k22 = OrderedGraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(count_induced_ktt(&k22, 2, &Budget::unlimited()).count, 1);
        assert_eq!(list_induced_ktt(&k22, &full_set(4), 2), vec![(vec![0, 1], vec![2, 3])]);
        assert_eq!(count_induced_ktt(&OrderedGraph::complete(6), 2, &Budget::unlimited()).count, 0);
        assert_eq!(count_independent_tsets(&OrderedGraph::empty(6), 3), 20);
        assert_eq!(count_independent_tsets(&OrderedGraph::complete(6), 2), 0);
    }
}
