//! Weight tables for the lift from a stepped-down ordered graph back to the
//! r-graph.
//!
//! Weights and totals are u128: every weight is at most C(m, r), and frames
//! whose C(m, r) does not fit are rejected.

use serde::{Deserialize, Serialize};

use crate::combin::{binom_u128, for_each_subset};
use crate::error::{Error, Result};
use crate::hg::{Coloring, OrderedGraph, MAX_N};

/// w(i, j) = C(i−1, k−1) · C(m−j, r−k−1) for k ≤ i < j ≤ m−r+k+1.
///
/// Stored by 0-based position inside U (the m−r+2 middle vertices), so
/// position p is index i = k + p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFrame {
    pub r: usize,
    pub m: usize,
    pub k: usize,
    len: usize,
    w: Vec<u128>,
}

impl WeightFrame {
    pub fn new(r: usize, m: usize, k: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::invalid(format!("r = {r} must be at least 2")));
        }
        if k < 1 || k > r - 1 {
            return Err(Error::invalid(format!("split k = {k} outside 1..={}", r - 1)));
        }
        if m < r || m > MAX_N {
            return Err(Error::invalid(format!("m = {m} must lie in {r}..={MAX_N}")));
        }
        if binom_u128(m as u64, r as u64).is_none() {
            return Err(Error::invalid(format!("C({m}, {r}) overflows u128")));
        }
        let len = m - r + 2;
        let mut w = vec![0; len * len];
        for pj in 1..len {
            let right = binom_u128((m - k - pj) as u64, (r - k - 1) as u64).expect("fits u128");
            for pi in 0..pj {
                let left = binom_u128((k - 1 + pi) as u64, (k - 1) as u64).expect("fits u128");
                w[pi * len + pj] = left * right;
            }
        }
        Ok(WeightFrame { r, m, k, len, w })
    }

    /// Number of middle vertices, m − r + 2.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn head_len(&self) -> usize {
        self.k - 1
    }

    pub fn tail_len(&self) -> usize {
        self.r - self.k - 1
    }

    /// Weight of the positions pi < pj (0-based within U).
    pub fn weight(&self, pi: usize, pj: usize) -> u128 {
        debug_assert!(pi < pj && pj < self.len);
        self.w[pi * self.len + pj]
    }

    /// Sum of all weights; equals C(m, r).
    pub fn total(&self) -> u128 {
        self.w.iter().sum()
    }

    /// Weight of the graph `g` read on U's positions.
    pub fn weight_of_pattern(&self, g: &OrderedGraph) -> u128 {
        g.edges().into_iter().map(|(a, b)| self.weight(a, b)).sum()
    }
}

/// Σ_{i<j} w(i,j)·χ(u_i,u_j) with χ the adjacency of `g`.
pub fn weighted_total(g: &OrderedGraph, u: &[usize], frame: &WeightFrame) -> Result<u128> {
    if u.len() != frame.len() {
        return Err(Error::invalid(format!("U has {} vertices, the frame needs {}", u.len(), frame.len())));
    }
    if u.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::invalid("U must be strictly increasing"));
    }
    if let Some(&v) = u.iter().find(|&&v| v >= g.n()) {
        return Err(Error::OutOfRange { vertex: v, n: g.n() });
    }
    let mut total = 0;
    for pj in 1..u.len() {
        for pi in 0..pj {
            if g.has_edge(u[pi], u[pj]) {
                total += frame.weight(pi, pj);
            }
        }
    }
    Ok(total)
}

/// Both sides of the lift identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftCheck {
    pub vertices: Vec<usize>,
    pub edge_count: u128,
    pub weighted: u128,
    pub holds: bool,
}

/// Number of r-subsets of `set` (increasing) colored 1.
pub fn coloring_count(c: &dyn Coloring, set: &[usize]) -> u128 {
    let mut count = 0u128;
    for_each_subset(set, c.arity(), |t| {
        count += c.color(t) as u128;
        true
    });
    count
}

/// Check that c restricted to the list `x` factors as c(y) = χ(y_k, y_{k+1});
/// `chi` is on positions of `x`.
pub fn check_pair_factorization(c: &dyn Coloring, x: &[usize], chi: &OrderedGraph, k: usize) -> Result<()> {
    let r = c.arity();
    let positions: Vec<usize> = (0..x.len()).collect();
    let mut bad = None;
    let mut buf = Vec::with_capacity(r);
    for_each_subset(&positions, r, |t| {
        buf.clear();
        buf.extend(t.iter().map(|&p| x[p]));
        if c.color(&buf) != chi.has_edge(t[k - 1], t[k]) {
            bad = Some(buf.clone());
            return false;
        }
        true
    });
    match bad {
        Some(t) => Err(Error::precondition(format!("coloring does not factor through χ on r-tuple {t:?}"))),
        None => Ok(()),
    }
}

/// Compare e(head ∪ U ∪ tail) with the weighted total of U. All index lists
/// are positions into `x`, which must be increasing.
pub fn verify_lift(
    c: &dyn Coloring,
    x: &[usize],
    chi: &OrderedGraph,
    frame: &WeightFrame,
    u: &[usize],
    head: &[usize],
    tail: &[usize],
) -> Result<LiftCheck> {
    if c.arity() != frame.r {
        return Err(Error::invalid("coloring arity differs from the frame's r"));
    }
    if chi.n() != x.len() {
        return Err(Error::invalid("χ must live on the positions of X"));
    }
    if head.len() != frame.head_len() || tail.len() != frame.tail_len() {
        return Err(Error::invalid(format!(
            "need {} head and {} tail positions, got {} and {}",
            frame.head_len(),
            frame.tail_len(),
            head.len(),
            tail.len()
        )));
    }
    check_pair_factorization(c, x, chi, frame.k)?;
    let positions: Vec<usize> = head.iter().chain(u).chain(tail).copied().collect();
    if positions.windows(2).any(|p| p[0] >= p[1]) || positions.last().is_some_and(|&p| p >= x.len()) {
        return Err(Error::invalid("head < U < tail must be increasing positions of X"));
    }
    let weighted = weighted_total(chi, u, frame)?;
    let vertices: Vec<usize> = positions.iter().map(|&p| x[p]).collect();
    let edge_count = coloring_count(c, &vertices);
    Ok(LiftCheck { vertices, edge_count, weighted, holds: edge_count == weighted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::binom_u128;

    #[test]
    fn read_off() {
        let f = WeightFrame::new(3, 5, 1).unwrap();
        let g = OrderedGraph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(weighted_total(&g, &[0, 1, 2, 3], &f).unwrap(), 3);
        assert_eq!(weighted_total(&OrderedGraph::empty(4), &[0, 1, 2, 3], &f).unwrap(), 0);
        assert!(weighted_total(&g, &[0, 1, 2], &f).is_err());
    }

    #[test]
    fn totals_are_binomials() {
        for r in 2..=5 {
            for m in r..=12 {
                for k in 1..r {
                    let f = WeightFrame::new(r, m, k).unwrap();
                    assert_eq!(f.total(), binom_u128(m as u64, r as u64).unwrap(), "r={r} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn r_plus_one_weights() {
        for r in 3..=8 {
            for k in 1..r {
                let f = WeightFrame::new(r, r + 1, k).unwrap();
                assert_eq!((f.weight(0, 1), f.weight(0, 2), f.weight(1, 2)), ((r - k) as u128, 1, k as u128));
            }
        }
    }
}
