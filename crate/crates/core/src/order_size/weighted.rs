//! Weighted (m, f)-subsets in stepped-down ordered graphs, or a homogeneous
//! set when none exists.

use serde::{Deserialize, Serialize};

use super::weights::{weighted_total, WeightFrame};
use crate::budget::Budget;
use crate::combin::binom_u128;
use crate::error::{Error, Result};
use crate::hbuilder::build_h;
use crate::hg::{OrderedGraph, VertexSet};
use crate::search::cliques::{full_set, max_clique};
use crate::search::{HomKind, HomogeneousWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedWitness {
    pub r: usize,
    pub m: usize,
    pub f: u128,
    /// m − r + 2 vertices of G, increasing
    pub u: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum WeightedOutcome {
    Weighted(WeightedWitness),
    Homogeneous(HomogeneousWitness),
}

/// G read with every pair flipped when `flip` is set.
#[derive(Clone, Copy)]
struct View<'a> {
    g: &'a OrderedGraph,
    flip: bool,
}

impl View<'_> {
    fn adj(&self, a: usize, b: usize) -> bool {
        self.g.has_edge(a, b) ^ self.flip
    }

    fn flipped(self) -> Self {
        View { g: self.g, flip: !self.flip }
    }

    fn kind(&self, k: HomKind) -> HomKind {
        if self.flip {
            k.flipped()
        } else {
            k
        }
    }
}

/// Outcome inside a view: U with Σ w·adj = f, or a set homogeneous in the view.
enum Found {
    U(Vec<usize>),
    Hom(Vec<usize>, HomKind),
}

fn map_flip(found: Found) -> Found {
    match found {
        Found::Hom(s, k) => Found::Hom(s, k.flipped()),
        u => u,
    }
}

fn is_hom(v: View, set: &[usize], kind: HomKind) -> bool {
    let want = kind == HomKind::Clique;
    set.iter().enumerate().all(|(p, &a)| set[p + 1..].iter().all(|&b| v.adj(a, b) == want))
}

fn first_pair(v: View, pool: &[usize], want: bool) -> Option<(usize, usize)> {
    pool.iter().enumerate().find_map(|(p, &a)| pool[p + 1..].iter().find(|&&b| v.adj(a, b) == want).map(|&b| (a, b)))
}

/// Smallest remaining vertex in, then delete its forward pairs that disagree
/// with `want`.
fn greedy_forward(v: View, pool: &[usize], want: bool) -> Vec<usize> {
    let mut rest = pool.to_vec();
    let mut out = Vec::new();
    while let Some((&x, tail)) = rest.split_first() {
        out.push(x);
        rest = tail.iter().copied().filter(|&y| v.adj(x, y) == want).collect();
    }
    out
}

fn greedy_backward(v: View, pool: &[usize], want: bool) -> Vec<usize> {
    let mut rest = pool.to_vec();
    let mut out = Vec::new();
    while let Some((&x, head)) = rest.split_last() {
        out.push(x);
        rest = head.iter().copied().filter(|&y| v.adj(y, x) == want).collect();
    }
    out.reverse();
    out
}

fn hom_if(set: Vec<usize>, kind: HomKind, h: usize) -> Option<Found> {
    (set.len() >= h).then_some(Found::Hom(set, kind))
}

/// The inductive argument for r = 3, following forward non-neighborhoods.
fn lemma3(v: View, pool: &[usize], m: usize, f: u128, h: usize) -> Option<Found> {
    let total = binom_u128(m as u64, 3).unwrap();
    if 2 * f > total {
        return lemma3(v.flipped(), pool, m, total - f, h).map(map_flip);
    }
    if m == 3 {
        return match first_pair(v, pool, false) {
            Some((a, b)) => Some(Found::U(vec![a, b])),
            None => hom_if(pool.to_vec(), HomKind::Clique, h),
        };
    }
    let t = h.checked_pow((m - 3) as u32).unwrap_or(usize::MAX);
    if m == 4 && f == 2 {
        return case_4_2(v, pool, h);
    }
    if m == 5 && f == 5 {
        return case_5_5(v, pool, h);
    }
    for (p, &x) in pool.iter().enumerate() {
        let n: Vec<usize> = pool[p + 1..].iter().copied().filter(|&y| !v.adj(x, y)).collect();
        if n.len() >= t {
            return match lemma3(v, &n, m - 1, f, h)? {
                Found::U(u) => Some(Found::U(std::iter::once(x).chain(u).collect())),
                hom => Some(hom),
            };
        }
    }
    hom_if(greedy_forward(v, pool, true), HomKind::Clique, h)
}

fn backward_non_neighbors(v: View, pool: &[usize], p: usize) -> Vec<usize> {
    let x = pool[p];
    pool[..p].iter().copied().filter(|&y| !v.adj(y, x)).collect()
}

fn case_4_2(v: View, pool: &[usize], h: usize) -> Option<Found> {
    for p in 0..pool.len() {
        let n = backward_non_neighbors(v, pool, p);
        if n.len() >= h {
            return match first_pair(v, &n, true) {
                Some((a, b)) => Some(Found::U(vec![a, b, pool[p]])),
                None => Some(Found::Hom(n, HomKind::Independent)),
            };
        }
    }
    hom_if(greedy_backward(v, pool, true), HomKind::Clique, h)
}

fn case_5_5(v: View, pool: &[usize], h: usize) -> Option<Found> {
    for p in 0..pool.len() {
        let n = backward_non_neighbors(v, pool, p);
        if n.len() < h * h {
            continue;
        }
        // inside N, with roles of edges and non-edges swapped
        for (q, &x) in n.iter().enumerate() {
            let n2: Vec<usize> = n[q + 1..].iter().copied().filter(|&y| v.adj(x, y)).collect();
            if n2.len() >= h {
                return match first_pair(v, &n2, false) {
                    Some((a, b)) => Some(Found::U(vec![x, a, b, pool[p]])),
                    None => Some(Found::Hom(n2, HomKind::Clique)),
                };
            }
        }
        return hom_if(greedy_forward(v, &n, false), HomKind::Independent, h);
    }
    hom_if(greedy_backward(v, pool, true), HomKind::Clique, h)
}

/// Backtracking for an increasing U of frame.len() vertices of weight f.
fn weighted_search(v: View, frame: &WeightFrame, f: u128, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let len = frame.len();
    // most weight still available once positions < p are placed
    let mut rest = vec![0u128; len + 1];
    for p in (0..len).rev() {
        rest[p] = rest[p + 1] + (0..p).map(|i| frame.weight(i, p)).sum::<u128>();
    }
    let n = v.g.n();
    let mut chosen = Vec::with_capacity(len);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        v: View,
        frame: &WeightFrame,
        f: u128,
        rest: &[u128],
        n: usize,
        start: usize,
        sum: u128,
        chosen: &mut Vec<usize>,
        budget: &Budget,
    ) -> Result<bool> {
        let p = chosen.len();
        if p == frame.len() {
            return Ok(sum == f);
        }
        if sum > f || sum + rest[p] < f {
            return Ok(false);
        }
        for x in start..=n - (frame.len() - p) {
            budget.spend(1)?;
            let add: u128 = chosen.iter().enumerate().filter(|&(_, &y)| v.adj(y, x)).map(|(i, _)| frame.weight(i, p)).sum();
            chosen.push(x);
            if rec(v, frame, f, rest, n, x + 1, sum + add, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
    if n < len {
        return Ok(None);
    }
    Ok(rec(v, frame, f, &rest, n, 0, 0, &mut chosen, budget)?.then_some(chosen))
}

/// Induced copy of the ordered graph `pattern` in G (order-preserving).
pub fn find_induced_ordered_copy(g: &OrderedGraph, pattern: &OrderedGraph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    let len = pattern.n();
    let n = g.n();
    fn rec(g: &OrderedGraph, pat: &OrderedGraph, start: usize, chosen: &mut Vec<usize>, budget: &Budget) -> Result<bool> {
        let p = chosen.len();
        if p == pat.n() {
            return Ok(true);
        }
        for x in start..=g.n() - (pat.n() - p) {
            budget.spend(1)?;
            if chosen.iter().enumerate().all(|(i, &y)| g.has_edge(y, x) == pat.has_edge(i, p)) {
                chosen.push(x);
                if rec(g, pat, x + 1, chosen, budget)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
    if n < len {
        return Ok(None);
    }
    let mut chosen = Vec::with_capacity(len);
    Ok(rec(g, pattern, 0, &mut chosen, budget)?.then_some(chosen))
}

/// Search for a weighted (m, f)-subset of G (frame k = 1) or a homogeneous
/// set of size h.
///
/// For r = 3 this runs the inductive argument (forward non-neighborhoods,
/// with the two special cases m=4,f=2 and m=5,f=5), which always succeeds
/// when |G| ≥ h^{m−2}. For r ≥ 4 it looks for an induced copy of the
/// explicit graph from `hbuilder` when m ≥ 5r², then for any weighted
/// subset, then for a homogeneous set; all under `budget`.
pub fn find_weighted_mf_subset(
    g: &OrderedGraph,
    r: usize,
    m: usize,
    f: u128,
    h: usize,
    budget: &Budget,
) -> Result<WeightedOutcome> {
    if r < 3 {
        return Err(Error::invalid("weighted subsets need r ≥ 3"));
    }
    let frame = WeightFrame::new(r, m, 1)?;
    let total = frame.total();
    if f > total {
        return Err(Error::invalid(format!("f = {f} exceeds C({m},{r}) = {total}")));
    }
    let v = View { g, flip: false };
    let all: Vec<usize> = (0..g.n()).collect();
    let found = if r == 3 { lemma3(v, &all, m, f, h) } else { general(v, &frame, f, h, budget)? };
    let out = match found {
        Some(Found::U(u)) => {
            let got = weighted_total(g, &u, &frame)?;
            if got != f {
                return Err(Error::Verification(format!("returned U {u:?} has weight {got}, not {f}")));
            }
            WeightedOutcome::Weighted(WeightedWitness { r, m, f, u: VertexSet::new(u, g.n())? })
        }
        Some(Found::Hom(set, kind)) => {
            if set.len() < h || !is_hom(v, &set, kind) {
                return Err(Error::Verification(format!("returned set {set:?} is not a {kind:?} of size ≥ {h}")));
            }
            WeightedOutcome::Homogeneous(HomogeneousWitness { set: VertexSet::new(set, g.n())?, kind, exact: false })
        }
        None => {
            let needed = h.checked_pow((m - 2) as u32);
            let note = if r == 3 && needed.is_none_or(|x| g.n() < x) { " (|G| < h^(m−2), no guarantee)" } else { "" };
            return Err(Error::SearchFailed(format!("no weighted ({m},{f})-subset and no homogeneous set of size {h}{note}")));
        }
    };
    Ok(out)
}

fn general(v: View, frame: &WeightFrame, f: u128, h: usize, budget: &Budget) -> Result<Option<Found>> {
    let total = frame.total();
    let (v, fq) = if 2 * f > total { (v.flipped(), total - f) } else { (v, f) };
    let r = frame.r;
    let m = frame.m;
    let as_graph = || if v.flip { v.g.complement() } else { v.g.clone() };
    if m >= 5 * r * r {
        let hc = build_h(r, m, fq)?;
        let g = as_graph();
        if let Some(u) = find_induced_ordered_copy(&g, &hc.pattern(), budget)? {
            return Ok(Some(Found::U(u)));
        }
    }
    if let Some(u) = weighted_search(v, frame, fq, budget)? {
        return Ok(Some(Found::U(u)));
    }
    let g = as_graph();
    let all = full_set(g.n());
    let clique = max_clique(&g, &all);
    let indep = max_clique(&g.complement(), &all);
    let (set, kind) = if clique.len() >= indep.len() { (clique, HomKind::Clique) } else { (indep, HomKind::Independent) };
    Ok(hom_if(set, v.kind(kind), h))
}
