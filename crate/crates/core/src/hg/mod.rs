//! Value types: hypergraphs, ordered graphs, colorings, vertex sets.

mod coloring;
pub mod density;
mod hypergraph;
pub mod io;
mod ordered;
mod vertex_set;

pub use coloring::{pair_index, Coloring, FnColoring, HashColoring, PalettedColoring, Tournament};
pub use density::{density, density_counts, density_exact};
pub use hypergraph::{Hypergraph, MAX_N, MAX_R};
pub use ordered::OrderedGraph;
pub use vertex_set::VertexSet;

use crate::rng;
use rand::Rng as _;

/// Seeded random r-graph where each r-subset is an edge with probability `p`.
pub fn random_hypergraph(r: usize, n: usize, p: f64, seed: u64) -> crate::error::Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(crate::error::Error::invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut g = rng::seeded(seed);
    Hypergraph::from_predicate(r, n, |_| g.gen_bool(p))
}

/// Seeded G(n, p) ordered graph.
pub fn random_ordered_graph(n: usize, p: f64, seed: u64) -> OrderedGraph {
    let mut g = rng::seeded(seed);
    OrderedGraph::from_fn(n, |_, _| g.gen_bool(p))
}
