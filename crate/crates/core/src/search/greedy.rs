use serde::{Deserialize, Serialize};

use crate::hg::{OrderedGraph, VertexSet};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GreedyClique {
    pub clique: VertexSet,
    /// every vertex has fewer than k forward non-neighbors
    pub bound_holds: bool,
    /// ceil(n / k), promised when `bound_holds`
    pub guaranteed: usize,
}

fn forward_non_neighbors(g: &OrderedGraph, v: usize, pool: &[usize]) -> usize {
    pool.iter().filter(|&&u| u > v && !g.has_edge(v, u)).count()
}

/// Take the smallest remaining vertex, delete its forward non-neighbors, repeat.
pub fn greedy_forward_clique(g: &OrderedGraph, k: usize) -> GreedyClique {
    let verts: Vec<usize> = (0..g.n()).collect();
    let clique = greedy_forward_clique_in(g, &verts);
    let bound_holds = k > 0 && verts.iter().all(|&v| forward_non_neighbors(g, v, &verts) < k);
    GreedyClique { clique: VertexSet::from_sorted(clique), bound_holds, guaranteed: g.n().div_ceil(k.max(1)) }
}

/// Forward greedy on the increasing list `pool`.
pub(crate) fn greedy_forward_clique_in(g: &OrderedGraph, pool: &[usize]) -> Vec<usize> {
    let mut rest: Vec<usize> = pool.to_vec();
    let mut out = Vec::new();
    while let Some((&v, tail)) = rest.split_first() {
        out.push(v);
        rest = tail.iter().copied().filter(|&u| g.has_edge(v, u)).collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        let r = greedy_forward_clique(&OrderedGraph::complete(6), 1);
        assert_eq!(r.clique.len(), 6);
        assert!(r.bound_holds);
        let r = greedy_forward_clique(&OrderedGraph::empty(6), 3);
        assert_eq!(r.clique.as_slice(), &[0]);
        assert!(!r.bound_holds);
    }
}
