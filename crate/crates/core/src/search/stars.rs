use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::for_each_subset;
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, OrderedGraph, VertexSet};
use crate::search::cliques::for_each_clique;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: VertexSet,
    pub induced: bool,
    pub anti: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StarSearch {
    pub stars: Vec<Star>,
    /// false when the budget cut the enumeration short
    pub complete: bool,
}

fn require_3(h: &Hypergraph) -> Result<()> {
    if h.r() != 3 {
        return Err(Error::precondition("link graphs and stars need a 3-graph"));
    }
    Ok(())
}

/// L(v) on V∖{v}, relabeled order-preservingly.
pub fn link_graph(h: &Hypergraph, v: usize) -> Result<OrderedGraph> {
    require_3(h)?;
    h.check_set(&[v])?;
    let others: Vec<usize> = (0..h.n()).filter(|&u| u != v).collect();
    let mut g = OrderedGraph::empty(others.len());
    for e in h.edges().iter().filter(|e| e.contains(&v)) {
        let (x, y) = match e.iter().position(|&u| u == v) {
            Some(0) => (e[1], e[2]),
            Some(1) => (e[0], e[2]),
            _ => (e[0], e[1]),
        };
        let rel = |u: usize| if u < v { u } else { u - 1 };
        g.add_edge(rel(x), rel(y));
    }
    Ok(g)
}

/// L(v) kept on the original labels (v isolated).
pub(crate) fn link_graph_full(h: &Hypergraph, v: usize) -> OrderedGraph {
    let mut g = OrderedGraph::empty(h.n());
    for e in h.edges().iter().filter(|e| e.contains(&v)) {
        let mut it = e.iter().copied().filter(|&u| u != v);
        let (x, y) = (it.next().unwrap(), it.next().unwrap());
        g.add_edge(x, y);
    }
    g
}

/// S spans no edge (star) / every triple of S is an edge (antistar).
/// Vacuous for |S| < 3.
pub(crate) fn leaves_induced(h: &Hypergraph, leaves: &[usize], anti: bool) -> bool {
    for_each_subset(leaves, 3, |t| h.has_edge(t) == anti)
}

/// Stars (or antistars) with `s` leaves, ordered by center then leaves.
pub fn find_stars(h: &Hypergraph, s: usize, want_induced: bool, want_anti: bool, budget: &Budget) -> Result<StarSearch> {
    find_stars_in(h, &(0..h.n()).collect::<Vec<_>>(), s, want_induced, want_anti, budget)
}

/// As [`find_stars`], with center and leaves drawn from `verts`.
pub fn find_stars_in(
    h: &Hypergraph,
    verts: &[usize],
    s: usize,
    want_induced: bool,
    want_anti: bool,
    budget: &Budget,
) -> Result<StarSearch> {
    require_3(h)?;
    h.check_set(verts)?;
    let mut stars = Vec::new();
    let mut complete = true;
    let mut inside = FixedBitSet::with_capacity(h.n());
    for &v in verts {
        inside.insert(v);
    }
    for &v in verts {
        let mut link = link_graph_full(h, v);
        if want_anti {
            link = link.complement();
        }
        let mut allowed = inside.clone();
        allowed.set(v, false);
        let finished = for_each_clique(&link, &allowed, s, |leaves| {
            if budget.spend(1).is_err() {
                return false;
            }
            let induced = leaves_induced(h, leaves, want_anti);
            if induced || !want_induced {
                stars.push(Star { center: v, leaves: VertexSet::from_sorted(leaves.to_vec()), induced, anti: want_anti });
            }
            true
        });
        if !finished {
            complete = false;
            break;
        }
    }
    Ok(StarSearch { stars, complete })
}

/// Direct re-check of a star's defining conditions.
pub fn verify_star(h: &Hypergraph, star: &Star) -> bool {
    if star.leaves.contains(star.center) {
        return false;
    }
    let want = !star.anti;
    let pairs_ok = for_each_subset(&star.leaves, 2, |p| h.has_edge_unordered(&[star.center, p[0], p[1]]) == want);
    pairs_ok && (!star.induced || leaves_induced(h, &star.leaves, star.anti))
}

/// Largest star centered at `v` (a maximum clique of L(v)) within `verts`.
pub(crate) fn largest_star_at(h: &Hypergraph, v: usize, verts: &[usize], anti: bool) -> Vec<usize> {
    let mut link = link_graph_full(h, v);
    if anti {
        link = link.complement();
    }
    let mut allowed = FixedBitSet::with_capacity(h.n());
    for &u in verts {
        allowed.insert(u);
    }
    allowed.set(v, false);
    crate::search::cliques::max_clique(&link, &allowed)
}
