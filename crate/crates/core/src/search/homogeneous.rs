use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::for_each_subset;
use crate::hg::{Hypergraph, VertexSet};
use crate::search::cliques::{greedy_hyper_clique, max_hyper_clique};

pub const DEFAULT_EXACT_LIMIT: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HomKind {
    Clique,
    Independent,
}

impl HomKind {
    pub fn flipped(self) -> HomKind {
        match self {
            HomKind::Clique => HomKind::Independent,
            HomKind::Independent => HomKind::Clique,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneousWitness {
    pub set: VertexSet,
    pub kind: HomKind,
    pub exact: bool,
}

/// Direct check: every r-subset of `set` is an edge (clique) or none is.
pub fn is_homogeneous(h: &Hypergraph, set: &[usize], kind: HomKind) -> bool {
    let want = kind == HomKind::Clique;
    for_each_subset(set, h.r(), |t| h.has_edge(t) == want)
}

/// Largest clique or independent set. Exact (branch and bound over H and
/// its complement) when n ≤ `exact_limit`, greedy otherwise. Ties go to the
/// clique, then to the lexicographically first set.
pub fn max_homogeneous(h: &Hypergraph, exact_limit: usize) -> HomogeneousWitness {
    max_homogeneous_budgeted(h, exact_limit, &Budget::unlimited())
}

pub fn max_homogeneous_budgeted(h: &Hypergraph, exact_limit: usize, budget: &Budget) -> HomogeneousWitness {
    let verts: Vec<usize> = (0..h.n()).collect();
    max_homogeneous_in(h, &verts, exact_limit, budget)
}

/// Same as [`max_homogeneous`] restricted to the increasing list `verts`.
pub fn max_homogeneous_in(h: &Hypergraph, verts: &[usize], exact_limit: usize, budget: &Budget) -> HomogeneousWitness {
    let r = h.r();
    let edge = |t: &[usize]| h.has_edge(t);
    let non_edge = |t: &[usize]| !h.has_edge(t);
    let (clique, indep, exact) = if verts.len() <= exact_limit {
        let (c, c_done) = max_hyper_clique(r, verts, &edge, budget);
        let (i, i_done) = max_hyper_clique(r, verts, &non_edge, budget);
        (c, i, c_done && i_done)
    } else {
        let mut best_c = Vec::new();
        let mut best_i = Vec::new();
        for start in 0..verts.len() {
            let c = greedy_hyper_clique(r, &verts[start..], &edge);
            if c.len() > best_c.len() {
                best_c = c;
            }
            let i = greedy_hyper_clique(r, &verts[start..], &non_edge);
            if i.len() > best_i.len() {
                best_i = i;
            }
        }
        (best_c, best_i, false)
    };
    let (set, kind) = if clique.len() >= indep.len() { (clique, HomKind::Clique) } else { (indep, HomKind::Independent) };
    debug_assert!(is_homogeneous(h, &set, kind));
    HomogeneousWitness { set: VertexSet::from_sorted(set), kind, exact }
}
