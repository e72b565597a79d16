use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple graph on `0..n` whose vertex order is meaningful.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OrderedRepr", into = "OrderedRepr")]
pub struct OrderedGraph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

#[derive(Serialize, Deserialize)]
struct OrderedRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<OrderedRepr> for OrderedGraph {
    type Error = Error;
    fn try_from(r: OrderedRepr) -> Result<Self> {
        OrderedGraph::from_edges(r.n, &r.edges)
    }
}

impl From<OrderedGraph> for OrderedRepr {
    fn from(g: OrderedGraph) -> Self {
        OrderedRepr { n: g.n, edges: g.edges() }
    }
}

impl OrderedGraph {
    pub fn empty(n: usize) -> Self {
        OrderedGraph { n, adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.adj[i].insert_range(..);
            g.adj[i].set(i, false);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("self-loop at {a}")));
            }
            if a.max(b) >= n {
                return Err(Error::OutOfRange { vertex: a.max(b), n });
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for j in 0..n {
            for i in 0..j {
                if f(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].set(b, false);
        self.adj[b].set(a, false);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Number of neighbors before `v` in the order.
    pub fn backward_degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..v)
    }

    /// Edges as (i, j) with i < j, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.adj[i].ones().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> OrderedGraph {
        OrderedGraph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Subgraph on the increasing list `verts`, relabeled 0..len.
    pub fn induced(&self, verts: &[usize]) -> OrderedGraph {
        OrderedGraph::from_fn(verts.len(), |i, j| self.has_edge(verts[i], verts[j]))
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts.iter().enumerate().all(|(p, &a)| verts[p + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, verts: &[usize]) -> bool {
        verts.iter().enumerate().all(|(p, &a)| verts[p + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let g = OrderedGraph::from_edges(4, &[(0, 2), (3, 1)]).unwrap();
        assert!(g.has_edge(2, 0) && g.has_edge(1, 3));
        assert_eq!(g.edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(g.backward_degree(3), 1);
        assert_eq!(g.complement().num_edges(), 4);
        assert!(OrderedGraph::from_edges(3, &[(1, 1)]).is_err());
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<OrderedGraph>(&json).unwrap(), g);
    }
}
