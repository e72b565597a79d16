//! Clique kernels on ordered graphs and r-uniform hypergraphs.

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::combin::for_each_subset;
use crate::hg::OrderedGraph;

/// Visit every clique of size `s` inside `allowed`, lexicographically.
/// Returns false if `f` stopped the scan.
pub fn for_each_clique(g: &OrderedGraph, allowed: &FixedBitSet, s: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut cur = Vec::with_capacity(s);
    clique_rec(g, allowed.clone(), s, &mut cur, &mut f)
}

fn clique_rec(g: &OrderedGraph, cand: FixedBitSet, s: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == s {
        return f(cur);
    }
    let need = s - cur.len();
    if cand.count_ones(..) < need {
        return true;
    }
    for v in cand.ones() {
        let mut next = cand.clone();
        next.intersect_with(g.neighbors(v));
        next.set_range(..v + 1, false);
        cur.push(v);
        let go = clique_rec(g, next, s, cur, f);
        cur.pop();
        if !go {
            return false;
        }
    }
    true
}

pub fn count_cliques(g: &OrderedGraph, allowed: &FixedBitSet, s: usize) -> u128 {
    fn rec(g: &OrderedGraph, cand: &FixedBitSet, need: usize) -> u128 {
        if need == 0 {
            return 1;
        }
        if need == 1 {
            return cand.count_ones(..) as u128;
        }
        let mut total = 0;
        for v in cand.ones() {
            let mut next = cand.clone();
            next.intersect_with(g.neighbors(v));
            next.set_range(..v + 1, false);
            if next.count_ones(..) + 1 >= need {
                total += rec(g, &next, need - 1);
            }
        }
        total
    }
    rec(g, allowed, s)
}

/// Lexicographically first maximum clique inside `allowed`.
pub fn max_clique(g: &OrderedGraph, allowed: &FixedBitSet) -> Vec<usize> {
    fn rec(g: &OrderedGraph, cand: FixedBitSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        for v in cand.ones() {
            let mut rest = cand.clone();
            rest.set_range(..v, false);
            if cur.len() + rest.count_ones(..) <= best.len() {
                return;
            }
            let mut next = rest;
            next.intersect_with(g.neighbors(v));
            cur.push(v);
            rec(g, next, cur, best);
            cur.pop();
        }
    }
    let mut best = Vec::new();
    rec(g, allowed.clone(), &mut Vec::new(), &mut best);
    best
}

pub fn full_set(n: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.insert_range(..);
    b
}

pub fn set_of(n: usize, items: &[usize]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    for &v in items {
        b.insert(v);
    }
    b
}

/// Branch and bound for a maximum clique of an r-uniform hypergraph given by
/// `is_edge` (called with increasing tuples), restricted to `verts`
/// (increasing). Returns the lexicographically first maximum clique and
/// whether the search completed within the budget.
pub fn max_hyper_clique(r: usize, verts: &[usize], is_edge: &dyn Fn(&[usize]) -> bool, budget: &Budget) -> (Vec<usize>, bool) {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    let complete = hyper_rec(r, verts, is_edge, budget, &mut cur, &mut best);
    (best, complete)
}

fn compatible(r: usize, cur: &[usize], v: usize, u: usize, is_edge: &dyn Fn(&[usize]) -> bool) -> bool {
    if cur.len() + 2 < r {
        return true;
    }
    let mut buf = Vec::with_capacity(r);
    for_each_subset(cur, r - 2, |t| {
        buf.clear();
        buf.extend_from_slice(t);
        buf.push(v);
        buf.push(u);
        is_edge(&buf)
    })
}

fn hyper_rec(
    r: usize,
    cand: &[usize],
    is_edge: &dyn Fn(&[usize]) -> bool,
    budget: &Budget,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
) -> bool {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if budget.spend(1).is_err() {
        return false;
    }
    for (p, &v) in cand.iter().enumerate() {
        if cur.len() + cand.len() - p <= best.len() {
            return true;
        }
        // cur ∪ {v} ∪ {u}: every r-subset containing both v and u must be an edge
        let next: Vec<usize> = cand[p + 1..].iter().copied().filter(|&u| compatible(r, cur, v, u, is_edge)).collect();
        cur.push(v);
        let ok = hyper_rec(r, &next, is_edge, budget, cur, best);
        cur.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// Greedy clique in vertex order: keep a vertex whenever it stays a clique.
pub fn greedy_hyper_clique(r: usize, verts: &[usize], is_edge: &dyn Fn(&[usize]) -> bool) -> Vec<usize> {
    let mut cur: Vec<usize> = Vec::new();
    for &v in verts {
        let ok = cur.len() + 1 < r || {
            let mut buf = Vec::with_capacity(r);
            for_each_subset(&cur, r - 1, |t| {
                buf.clear();
                buf.extend_from_slice(t);
                buf.push(v);
                is_edge(&buf)
            })
        };
        if ok {
            cur.push(v);
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_counts() {
        let k5 = OrderedGraph::complete(5);
        assert_eq!(count_cliques(&k5, &full_set(5), 3), 10);
        assert_eq!(max_clique(&k5, &full_set(5)), vec![0, 1, 2, 3, 4]);
        let e = OrderedGraph::empty(4);
        assert_eq!(max_clique(&e, &full_set(4)), vec![0]);
        let mut seen = Vec::new();
        for_each_clique(&k5, &set_of(5, &[1, 3, 4]), 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![1, 3], vec![1, 4], vec![3, 4]]);
    }

    #[test]
    fn hyper_clique_on_k4_minus_edge() {
        // 3-graph on 5 vertices: complete on {0,1,2,3} except 123
        let is_edge = |t: &[usize]| t[2] < 4 && t != [1, 2, 3];
        let verts: Vec<usize> = (0..5).collect();
        let (c, done) = max_hyper_clique(3, &verts, &is_edge, &Budget::unlimited());
        assert!(done);
        assert_eq!(c, vec![0, 1, 2]);
    }
}
