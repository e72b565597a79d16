//! Substitution certificates over empty graphs, cliques and F0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hg::OrderedGraph;

/// F0: vertices 0, 1, 2 with the single edge 02.
pub fn f0() -> OrderedGraph {
    OrderedGraph::from_edges(3, &[(0, 2)]).expect("valid")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubstitutionTree {
    Empty {
        size: usize,
    },
    Clique {
        size: usize,
    },
    F0,
    /// Substitute `children[i]` into vertex i of `host`, which must be a
    /// primitive node (Empty, Clique or F0) with one vertex per child.
    Host {
        host: Box<SubstitutionTree>,
        children: Vec<SubstitutionTree>,
    },
}

use SubstitutionTree::*;

impl SubstitutionTree {
    pub fn single() -> Self {
        Empty { size: 1 }
    }

    pub fn host(host: SubstitutionTree, children: Vec<SubstitutionTree>) -> Self {
        Host { host: Box::new(host), children }
    }

    fn primitive_graph(&self) -> Option<OrderedGraph> {
        match *self {
            Empty { size } => Some(OrderedGraph::empty(size)),
            Clique { size } => Some(OrderedGraph::complete(size)),
            F0 => Some(f0()),
            Host { .. } => None,
        }
    }

    /// Total number of vertices after expansion.
    pub fn order(&self) -> usize {
        match self {
            Empty { size } | Clique { size } => *size,
            F0 => 3,
            Host { children, .. } => children.iter().map(|c| c.order()).sum(),
        }
    }

    /// Every leaf is Empty, Clique or F0 and every host is primitive.
    pub fn is_well_formed(&self) -> bool {
        self.check().is_ok()
    }

    fn check(&self) -> Result<()> {
        match self {
            Empty { size } | Clique { size } if *size == 0 => Err(Error::invalid("malformed certificate: leaf of size 0")),
            Empty { .. } | Clique { .. } | F0 => Ok(()),
            Host { host, children } => {
                let g = host.primitive_graph().ok_or_else(|| Error::invalid("malformed certificate: host is not primitive"))?;
                host.check()?;
                if g.n() != children.len() {
                    return Err(Error::invalid(format!(
                        "malformed certificate: host has {} vertices but {} children",
                        g.n(),
                        children.len()
                    )));
                }
                children.iter().try_for_each(|c| c.check())
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Host { host, children } => 1 + host.size() + children.iter().map(|c| c.size()).sum::<usize>(),
            _ => 1,
        }
    }

    /// Merge hosts whose children are all of the host's own kind, drop
    /// one-child hosts and write single vertices as Empty(1).
    pub fn simplify(self) -> Self {
        match self {
            Clique { size: 1 } => Empty { size: 1 },
            Host { host, children } => {
                let mut children: Vec<_> = children.into_iter().map(Self::simplify).collect();
                if children.len() == 1 {
                    return children.pop().unwrap();
                }
                let all = |want_clique: bool| {
                    children.iter().all(|c| match c {
                        Empty { size: 1 } => true,
                        Empty { .. } => !want_clique,
                        Clique { .. } => want_clique,
                        _ => false,
                    })
                };
                let n: usize = children.iter().map(|c| c.order()).sum();
                match *host {
                    Empty { .. } if all(false) => Empty { size: n },
                    Clique { .. } if all(true) => Clique { size: n },
                    h => Host { host: Box::new(h), children },
                }
            }
            t => t,
        }
    }
}

/// Expand the tree to the ordered graph it describes: children are laid out
/// in host order, and two children are joined completely iff their host
/// vertices are adjacent.
pub fn expand_certificate(cert: &SubstitutionTree) -> Result<OrderedGraph> {
    cert.check()?;
    Ok(expand(cert))
}

fn expand(cert: &SubstitutionTree) -> OrderedGraph {
    if let Some(g) = cert.primitive_graph() {
        return g;
    }
    let Host { host, children } = cert else { unreachable!() };
    let hg = host.primitive_graph().expect("checked");
    let parts: Vec<OrderedGraph> = children.iter().map(expand).collect();
    let mut offsets = vec![0];
    for p in &parts {
        offsets.push(offsets.last().unwrap() + p.n());
    }
    let n = *offsets.last().unwrap();
    let mut g = OrderedGraph::empty(n);
    for (c, p) in parts.iter().enumerate() {
        for (a, b) in p.edges() {
            g.add_edge(offsets[c] + a, offsets[c] + b);
        }
    }
    for (a, b) in hg.edges() {
        for u in offsets[a]..offsets[a + 1] {
            for v in offsets[b]..offsets[b + 1] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Whether every leaf is Empty, Clique or F0 (the structural EH witness).
pub fn leaves_are_primitive(cert: &SubstitutionTree) -> bool {
    match cert {
        Empty { .. } | Clique { .. } | F0 => true,
        Host { host, children } => host.primitive_graph().is_some() && children.iter().all(leaves_are_primitive),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ForestKind {
    Monotone,
    Nested,
}

/// x joined completely to y; either side may be missing.
pub(crate) fn join(x: Option<SubstitutionTree>, y: Option<SubstitutionTree>) -> Option<SubstitutionTree> {
    pair(Clique { size: 2 }, x, y)
}

/// x next to y with no edges between them.
pub(crate) fn beside(x: Option<SubstitutionTree>, y: Option<SubstitutionTree>) -> Option<SubstitutionTree> {
    pair(Empty { size: 2 }, x, y)
}

fn pair(host: SubstitutionTree, x: Option<SubstitutionTree>, y: Option<SubstitutionTree>) -> Option<SubstitutionTree> {
    match (x, y) {
        (Some(x), Some(y)) => Some(SubstitutionTree::host(host, vec![x, y])),
        (x, None) => x,
        (None, y) => y,
    }
}

pub(crate) fn empty_opt(n: usize) -> Option<SubstitutionTree> {
    (n > 0).then_some(Empty { size: n })
}

pub(crate) fn clique_opt(n: usize) -> Option<SubstitutionTree> {
    (n > 0).then_some(Clique { size: n })
}

/// Star whose center comes first, followed by `leaves` leaves.
pub(crate) fn monotone_star(leaves: usize) -> SubstitutionTree {
    join(Some(SubstitutionTree::single()), empty_opt(leaves)).unwrap()
}

/// Disjoint monotone stars laid out left to right.
pub(crate) fn monotone_forest(sizes: &[usize]) -> Option<SubstitutionTree> {
    match sizes.len() {
        0 => None,
        1 => Some(monotone_star(sizes[0])),
        t => Some(SubstitutionTree::host(Empty { size: t }, sizes.iter().map(|&s| monotone_star(s)).collect())),
    }
}

/// Nested forest L_1 < ... < L_t < inner < c_t < ... < c_1, where star i has
/// |L_i| = leaves[i] and `inner` (if any) is joined to nothing outside itself.
pub(crate) fn nested_forest(leaves: &[usize], inner: Option<SubstitutionTree>) -> Option<SubstitutionTree> {
    let Some((&l1, rest)) = leaves.split_first() else { return inner };
    let rest = nested_forest(rest, inner);
    let c1 = SubstitutionTree::single();
    Some(match (empty_opt(l1), rest) {
        (Some(l), Some(rest)) => SubstitutionTree::host(F0, vec![l, rest, c1]),
        (Some(l), None) => join(Some(l), Some(c1)).unwrap(),
        (None, rest) => beside(rest, Some(c1)).unwrap(),
    })
}

/// Certificate for a monotone (star sizes) or nested (leaf-set sizes) star forest.
pub fn certify_star_forests(kind: ForestKind, shape: &[usize]) -> Result<SubstitutionTree> {
    if shape.is_empty() {
        return Err(Error::invalid("star forest shape is empty"));
    }
    let tree = match kind {
        ForestKind::Monotone => monotone_forest(shape),
        ForestKind::Nested => nested_forest(shape, None),
    };
    Ok(tree.expect("nonempty shape").simplify())
}
