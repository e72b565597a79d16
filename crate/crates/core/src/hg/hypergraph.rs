use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::combin::{binom_sat, for_each_subset, next_combination, BinomTable};
use crate::error::{Error, Result};
use crate::hg::VertexSet;

/// Dense membership below this many potential edges, hashing above.
const DENSE_LIMIT: u64 = 1 << 26;

pub const MAX_R: usize = 8;
pub const MAX_N: usize = 1 << 16;

#[derive(Clone, Debug)]
enum EdgeIndex {
    Dense { bits: FixedBitSet, table: BinomTable },
    Sparse(HashSet<u128>),
}

fn pack(t: &[usize]) -> u128 {
    t.iter().fold(0u128, |acc, &v| (acc << 16) | v as u128)
}

/// An r-uniform hypergraph on the ordered vertex range `0..n`.
///
/// Edges are kept as sorted tuples in lexicographic order.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    index: EdgeIndex,
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;
    fn try_from(h: HypergraphRepr) -> Result<Self> {
        Hypergraph::from_edges(h.r, h.n, h.edges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr { r: h.r, n: h.n, edges: h.edges }
    }
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

fn check_shape(r: usize, n: usize) -> Result<()> {
    if !(2..=MAX_R).contains(&r) {
        return Err(Error::invalid(format!("uniformity {r} outside 2..={MAX_R}")));
    }
    if n > MAX_N {
        return Err(Error::invalid(format!("{n} vertices exceeds the limit {MAX_N}")));
    }
    Ok(())
}

impl Hypergraph {
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::from_edges(r, n, Vec::new())
    }

    pub fn complete(r: usize, n: usize) -> Result<Self> {
        Self::from_predicate(r, n, |_| true)
    }

    /// Edges must be strictly increasing r-tuples in range, without repeats.
    pub fn from_edges(r: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        check_shape(r, n)?;
        for e in &edges {
            if e.len() != r {
                return Err(Error::InvalidEdge { edge: e.clone(), reason: format!("expected {r} entries") });
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidEdge { edge: e.clone(), reason: "not strictly increasing".into() });
            }
            if e[r - 1] >= n {
                return Err(Error::OutOfRange { vertex: e[r - 1], n });
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge { edge: w[0].clone(), reason: "duplicate".into() });
        }
        Ok(Self::build(r, n, edges))
    }

    /// Every r-subset of `0..n` for which `pred` holds becomes an edge.
    pub fn from_predicate(r: usize, n: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Result<Self> {
        check_shape(r, n)?;
        let mut edges = Vec::new();
        if r <= n {
            let mut c: Vec<usize> = (0..r).collect();
            loop {
                if pred(&c) {
                    edges.push(c.clone());
                }
                if !next_combination(&mut c, n) {
                    break;
                }
            }
        }
        Ok(Self::build(r, n, edges))
    }

    fn build(r: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        let universe = binom_sat(n, r);
        let index = if universe <= DENSE_LIMIT {
            let table = BinomTable::new(n, r);
            let mut bits = FixedBitSet::with_capacity(universe as usize);
            for e in &edges {
                bits.insert(table.colex_rank(e) as usize);
            }
            EdgeIndex::Dense { bits, table }
        } else {
            EdgeIndex::Sparse(edges.iter().map(|e| pack(e)).collect())
        };
        Hypergraph { r, n, edges, index }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Membership of a strictly increasing r-tuple.
    pub fn has_edge(&self, t: &[usize]) -> bool {
        debug_assert_eq!(t.len(), self.r);
        match &self.index {
            EdgeIndex::Dense { bits, table } => bits.contains(table.colex_rank(t) as usize),
            EdgeIndex::Sparse(set) => set.contains(&pack(t)),
        }
    }

    /// Membership of an arbitrary r-tuple of distinct vertices (any order).
    pub fn has_edge_unordered(&self, t: &[usize]) -> bool {
        let mut s = [0usize; MAX_R];
        let s = &mut s[..t.len()];
        s.copy_from_slice(t);
        s.sort_unstable();
        self.has_edge(s)
    }

    pub fn complement(&self) -> Hypergraph {
        Self::from_predicate(self.r, self.n, |t| !self.has_edge(t)).expect("shape already checked")
    }

    /// Sub-hypergraph on `s`, relabeled order-preservingly.
    pub fn induced(&self, s: &VertexSet) -> Result<Hypergraph> {
        self.check_set(s)?;
        let verts = s.as_slice();
        let mut edges = Vec::new();
        for_each_subset(&(0..verts.len()).collect::<Vec<_>>(), self.r, |pos| {
            let t: Vec<usize> = pos.iter().map(|&p| verts[p]).collect();
            if self.has_edge(&t) {
                edges.push(pos.to_vec());
            }
            true
        });
        Ok(Self::build(self.r, verts.len(), edges))
    }

    pub fn edge_count(&self, s: &VertexSet) -> Result<u64> {
        self.check_set(s)?;
        Ok(self.edge_count_sorted(s.as_slice()))
    }

    /// Number of edges inside a strictly increasing slice of in-range vertices.
    pub fn edge_count_sorted(&self, s: &[usize]) -> u64 {
        if s.len() < self.r {
            return 0;
        }
        if binom_sat(s.len(), self.r) <= self.edges.len() as u64 {
            let mut count = 0;
            for_each_subset(s, self.r, |t| {
                if self.has_edge(t) {
                    count += 1;
                }
                true
            });
            count
        } else {
            let mut mask = FixedBitSet::with_capacity(self.n);
            for &v in s {
                mask.insert(v);
            }
            self.edges.iter().filter(|e| e.iter().all(|&v| mask.contains(v))).count() as u64
        }
    }

    /// Degree of each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub(crate) fn check_set(&self, s: &[usize]) -> Result<()> {
        match s.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(Error::OutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let h = Hypergraph::empty(3, 5).unwrap();
        assert_eq!(h.complement().num_edges(), 10);
        let h = Hypergraph::from_edges(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(h.complement().edges(), &[vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Hypergraph::from_edges(3, 4, vec![vec![0, 2, 1]]).is_err());
        assert!(Hypergraph::from_edges(3, 4, vec![vec![0, 1, 4]]).is_err());
        assert!(Hypergraph::from_edges(3, 4, vec![vec![0, 1, 2], vec![0, 1, 2]]).is_err());
        assert!(Hypergraph::from_edges(3, 4, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn induced_examples() {
        let k6 = Hypergraph::complete(3, 6).unwrap();
        let s = VertexSet::new(vec![1, 2, 4, 5], 6).unwrap();
        assert_eq!(k6.induced(&s).unwrap(), Hypergraph::complete(3, 4).unwrap());
        let one = Hypergraph::from_edges(3, 6, vec![vec![0, 1, 2]]).unwrap();
        let s = VertexSet::new(vec![0, 1, 2, 5], 6).unwrap();
        assert_eq!(one.induced(&s).unwrap().num_edges(), 1);
        assert_eq!(one.induced(&VertexSet::range(0, 6)).unwrap(), one);
        assert_eq!(k6.edge_count(&VertexSet::range(0, 6)).unwrap(), 20);
    }

    #[test]
    fn sparse_and_dense_agree() {
        // n large enough that C(n, 4) passes the dense limit
        let n = 300;
        let edges = vec![vec![0, 5, 9, 299], vec![1, 2, 3, 4]];
        let h = Hypergraph::from_edges(4, n, edges).unwrap();
        assert!(matches!(h.index, EdgeIndex::Sparse(_)));
        assert!(h.has_edge(&[0, 5, 9, 299]));
        assert!(!h.has_edge(&[0, 5, 9, 298]));
        assert_eq!(h.edge_count_sorted(&[0, 1, 2, 3, 4, 5, 9, 299]), 2);
    }
}
