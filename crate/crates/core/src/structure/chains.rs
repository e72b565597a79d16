//! Star chains, star-free subsets and pair chains in 3-graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::combin::for_each_subset;
use crate::error::{Error, Result};
use crate::hg::{Hypergraph, VertexSet};
use crate::search::cliques::set_of;
use crate::search::{find_stars_in, largest_star_at, link_graph_full, list_induced_ktt, spencer_independent, Star};
use crate::structure::family::{dens_xxx, dens_xxy, dens_xyz, Dens};

fn require_3(h: &Hypergraph) -> Result<()> {
    if h.r() != 3 {
        return Err(Error::precondition("needs a 3-graph"));
    }
    Ok(())
}

fn all_verts(h: &Hypergraph) -> Vec<usize> {
    (0..h.n()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarChain {
    /// A_1..A_ℓ in chain order
    pub sets: Vec<VertexSet>,
    /// centers available when each level was chosen, top level first
    pub centers: Vec<usize>,
}

/// d(A_i,A_i,A_i) = 0 and d(A_i,A_j,A_j) = 1 for i < j, by counting.
pub fn verify_star_chain(h: &Hypergraph, sets: &[VertexSet]) -> Result<()> {
    for (i, a) in sets.iter().enumerate() {
        if dens_xxx(h, a) == Dens::Mixed || dens_xxx(h, a) == Dens::One {
            return Err(Error::Verification(format!("chain set {:?} spans an edge", a.as_slice())));
        }
        for b in &sets[i + 1..] {
            if !a.is_disjoint(b) {
                return Err(Error::Verification("chain sets overlap".into()));
            }
            if !matches!(dens_xxy(h, b, a), Dens::One | Dens::Vacuous) {
                return Err(Error::Verification(format!("d({:?}, {1:?}, {1:?}) ≠ 1", a.as_slice(), b.as_slice())));
            }
        }
    }
    Ok(())
}

/// Induced stars of size `s` inside `pool`, grouped by leaf set.
fn stars_by_leaves(h: &Hypergraph, pool: &[usize], s: usize, budget: &Budget) -> Result<BTreeMap<Vec<usize>, Vec<usize>>> {
    let found = find_stars_in(h, pool, s, true, false, budget)?;
    if !found.complete {
        return Err(Error::BudgetExhausted(budget.used()));
    }
    let mut by: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for Star { center, leaves, .. } in found.stars {
        by.entry(leaves.into_vec()).or_default().push(center);
    }
    for c in by.values_mut() {
        c.sort_unstable();
    }
    Ok(by)
}

/// First entry with the most centers (ties to the smaller key).
fn most_served<K: Clone + Ord>(by: &BTreeMap<K, Vec<usize>>) -> Option<(K, Vec<usize>)> {
    let best = by.values().map(Vec::len).max()?;
    by.iter().find(|(_, c)| c.len() == best).map(|(k, c)| (k.clone(), c.clone()))
}

/// Greedy pigeonhole chain: take the leaf set S of induced stars with the
/// most centers as the top set, recurse inside its centers. The bottom set
/// only needs d(A_1,A_1,A_1) = 0, so it is the first independent s-set of
/// what is left.
pub fn find_star_chain(h: &Hypergraph, l: usize, s: usize, budget: &Budget) -> Result<StarChain> {
    find_star_chain_in(h, &all_verts(h), l, s, budget)
}

pub fn find_star_chain_in(h: &Hypergraph, verts: &[usize], l: usize, s: usize, budget: &Budget) -> Result<StarChain> {
    require_3(h)?;
    h.check_set(verts)?;
    if l == 0 {
        return Ok(StarChain { sets: Vec::new(), centers: Vec::new() });
    }
    let mut pool = verts.to_vec();
    let mut top_down = Vec::with_capacity(l);
    let mut centers = Vec::with_capacity(l);
    for level in (1..=l).rev() {
        centers.push(pool.len());
        if level == 1 {
            let mut pick = None;
            for_each_subset(&pool, s, |t| {
                if budget.spend(1).is_err() {
                    return false;
                }
                if h.edge_count_sorted(t) == 0 {
                    pick = Some(t.to_vec());
                    return false;
                }
                true
            });
            budget.spend(0)?;
            match pick {
                Some(t) => top_down.push(VertexSet::from_sorted(t)),
                None => {
                    return Err(Error::SearchFailed(format!(
                        "star chain level 1: no independent {s}-set among {} remaining vertices",
                        pool.len()
                    )))
                }
            }
            break;
        }
        let by = stars_by_leaves(h, &pool, s, budget)?;
        let Some((leaves, cs)) = most_served(&by) else {
            return Err(Error::SearchFailed(format!(
                "star chain level {level}: no induced star of size {s} among {} vertices",
                pool.len()
            )));
        };
        top_down.push(VertexSet::from_sorted(leaves));
        pool = cs;
    }
    top_down.reverse();
    verify_star_chain(h, &top_down)?;
    Ok(StarChain { sets: top_down, centers })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarFree {
    pub set: VertexSet,
    /// induced stars of size s found before the deletion step
    pub stars: usize,
    /// ⌈n^(θ/(2s))⌉, reported only
    pub advisory_target: usize,
}

/// Independent set of the (s+1)-graph whose edges are {v} ∪ S over induced
/// stars (v, S); such a set spans no induced star of size s.
pub fn star_free_subset(h: &Hypergraph, s: usize, theta: f64, seed: u64, budget: &Budget) -> Result<StarFree> {
    star_free_subset_in(h, &all_verts(h), s, theta, seed, budget)
}

pub fn star_free_subset_in(
    h: &Hypergraph,
    verts: &[usize],
    s: usize,
    theta: f64,
    seed: u64,
    budget: &Budget,
) -> Result<StarFree> {
    require_3(h)?;
    h.check_set(verts)?;
    let n = verts.len();
    let advisory_target = (n as f64).powf(theta / (2.0 * s.max(1) as f64)).ceil() as usize;
    let found = find_stars_in(h, verts, s, true, false, budget)?;
    if !found.complete {
        return Err(Error::BudgetExhausted(budget.used()));
    }
    let stars = found.stars.len();
    if s + 1 > crate::hg::MAX_R || stars == 0 {
        let set = VertexSet::from_sorted(verts.to_vec());
        if stars > 0 {
            return Err(Error::invalid(format!("star size {s} exceeds the supported uniformity")));
        }
        return Ok(StarFree { set, stars, advisory_target });
    }
    // relabel verts to 0..n for the auxiliary (s+1)-graph
    let pos = |v: usize| verts.binary_search(&v).expect("star inside verts");
    let mut edges: Vec<Vec<usize>> = found
        .stars
        .iter()
        .map(|st| {
            let mut e: Vec<usize> = st.leaves.iter().map(pos).collect();
            e.push(pos(st.center));
            e.sort_unstable();
            e
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let aux = Hypergraph::from_edges(s + 1, n, edges)?;
    let ind = spencer_independent(&aux, 32, seed);
    let set: Vec<usize> = ind.set.iter().map(|p| verts[p]).collect();
    let left = find_stars_in(h, &set, s, true, false, &Budget::unlimited())?;
    if !left.stars.is_empty() {
        return Err(Error::Verification(format!("star-free subset still spans {} induced stars", left.stars.len())));
    }
    Ok(StarFree { set: VertexSet::from_sorted(set), stars, advisory_target })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FreeSide {
    StarFree,
    AntistarFree,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LargeStarFree {
    pub w: VertexSet,
    pub side: FreeSide,
    /// largest star (or antistar, per side) inside W
    pub largest: usize,
    /// ⌈|W|^δ⌉
    pub bound: usize,
}

fn largest_in(h: &Hypergraph, verts: &[usize], anti: bool) -> (usize, Vec<usize>, usize) {
    let mut best = (0, Vec::new(), usize::MAX);
    for &v in verts {
        let leaves = largest_star_at(h, v, verts, anti);
        if leaves.len() > best.0 {
            best = (leaves.len(), leaves, v);
        }
    }
    best
}

/// W with no star (or no antistar) of size ≥ |W|^δ. The input must have no
/// induced star or antistar of size `s`.
pub fn no_large_star_subset(h: &Hypergraph, s: usize, delta: f64, budget: &Budget) -> Result<LargeStarFree> {
    no_large_star_subset_in(h, &all_verts(h), s, delta, budget)
}

pub fn no_large_star_subset_in(h: &Hypergraph, verts: &[usize], s: usize, delta: f64, budget: &Budget) -> Result<LargeStarFree> {
    require_3(h)?;
    h.check_set(verts)?;
    for anti in [false, true] {
        let found = find_stars_in(h, verts, s, true, anti, budget)?;
        if let Some(st) = found.stars.first() {
            return Err(Error::precondition(format!(
                "induced {} of size {s}: center {}, leaves {:?}",
                if anti { "antistar" } else { "star" },
                st.center,
                st.leaves.as_slice()
            )));
        }
        if !found.complete {
            return Err(Error::BudgetExhausted(budget.used()));
        }
    }
    let bound = |k: usize| (k as f64).powf(delta).ceil() as usize;
    let (star, leaves, _) = largest_in(h, verts, false);
    if star < bound(verts.len()) {
        return Ok(LargeStarFree {
            w: VertexSet::from_sorted(verts.to_vec()),
            side: FreeSide::StarFree,
            largest: star,
            bound: bound(verts.len()),
        });
    }
    let b = bound(leaves.len());
    let (anti, _, _) = largest_in(h, &leaves, true);
    if anti < b {
        return Ok(LargeStarFree { w: VertexSet::from_sorted(leaves), side: FreeSide::AntistarFree, largest: anti, bound: b });
    }
    let (star_w, _, _) = largest_in(h, &leaves, false);
    if star_w < b {
        return Ok(LargeStarFree { w: VertexSet::from_sorted(leaves), side: FreeSide::StarFree, largest: star_w, bound: b });
    }
    Err(Error::SearchFailed(format!(
        "leaves of the largest star ({} vertices) hold a star and an antistar of size ≥ {b}",
        leaves.len()
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairChain {
    /// (A_i, B_i) for i = 0..ℓ in chain order
    pub pairs: Vec<(VertexSet, VertexSet)>,
    /// |V(A, B)| of the pair chosen at each level, top level first
    pub centers: Vec<usize>,
}

/// d(A_i,A_j,B_j) = d(B_i,A_j,B_j) = 1 and d(X_i,Y_j,Y_j) = 0 for i < j,
/// X, Y ∈ {A, B}.
pub fn verify_pair_chain(h: &Hypergraph, pairs: &[(VertexSet, VertexSet)]) -> Result<()> {
    let all: Vec<&VertexSet> = pairs.iter().flat_map(|(a, b)| [a, b]).collect();
    for (i, x) in all.iter().enumerate() {
        if all[i + 1..].iter().any(|y| !x.is_disjoint(y)) {
            return Err(Error::Verification("pair chain sets overlap".into()));
        }
    }
    let one = |d: Dens| matches!(d, Dens::One | Dens::Vacuous);
    let zero = |d: Dens| matches!(d, Dens::Zero | Dens::Vacuous);
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (aj, bj) = (pairs[j].0.as_slice(), pairs[j].1.as_slice());
            for x in [&pairs[i].0, &pairs[i].1] {
                let x = x.as_slice();
                if !one(dens_xyz(h, x, aj, bj)) {
                    return Err(Error::Verification(format!("d({x:?}, A_{j}, B_{j}) ≠ 1")));
                }
                if !zero(dens_xxy(h, aj, x)) || !zero(dens_xxy(h, bj, x)) {
                    return Err(Error::Verification(format!("d({x:?}, Y_{j}, Y_{j}) ≠ 0")));
                }
            }
        }
    }
    Ok(())
}

/// Induced K_{t,t} in link graphs, pigeonholed over centers: the pair (A, B)
/// spanned in the most links becomes the top level and the recursion runs
/// inside V(A, B). The bottom pair carries no constraint of its own and is
/// the first two t-blocks of what is left.
pub fn find_pair_chain(h: &Hypergraph, l: usize, t: usize, budget: &Budget) -> Result<PairChain> {
    find_pair_chain_in(h, &all_verts(h), l, t, budget)
}

pub fn find_pair_chain_in(h: &Hypergraph, verts: &[usize], l: usize, t: usize, budget: &Budget) -> Result<PairChain> {
    require_3(h)?;
    h.check_set(verts)?;
    if t == 0 {
        return Err(Error::invalid("t must be positive"));
    }
    let mut pool = verts.to_vec();
    let mut top_down = Vec::with_capacity(l);
    let mut centers = Vec::with_capacity(l);
    for level in (0..l).rev() {
        if level == 0 {
            if pool.len() < 2 * t {
                return Err(Error::SearchFailed(format!("pair chain level 0: {} vertices left, need {}", pool.len(), 2 * t)));
            }
            top_down.push((VertexSet::from_sorted(pool[..t].to_vec()), VertexSet::from_sorted(pool[t..2 * t].to_vec())));
            centers.push(pool.len());
            break;
        }
        let allowed = set_of(h.n(), &pool);
        let mut by: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
        for &v in &pool {
            budget.spend(1)?;
            let link = link_graph_full(h, v);
            let mut allow = allowed.clone();
            allow.set(v, false);
            for ab in list_induced_ktt(&link, &allow, t) {
                by.entry(ab).or_default().push(v);
            }
        }
        let Some(((a, b), cs)) = most_served(&by) else {
            return Err(Error::SearchFailed(format!(
                "pair chain level {level}: no induced K_{{{t},{t}}} in any link among {} vertices",
                pool.len()
            )));
        };
        centers.push(cs.len());
        top_down.push((VertexSet::from_sorted(a), VertexSet::from_sorted(b)));
        pool = cs;
    }
    top_down.reverse();
    verify_pair_chain(h, &top_down)?;
    Ok(PairChain { pairs: top_down, centers })
}
