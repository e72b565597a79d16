//! Homogeneous sets, stars, link graphs and the counting lemmas' primitives.

pub mod cliques;
mod greedy;
mod homogeneous;
mod ktt;
mod spencer;
mod stars;

pub use greedy::{greedy_forward_clique, GreedyClique};
pub use homogeneous::{
    is_homogeneous, max_homogeneous, max_homogeneous_budgeted, max_homogeneous_in, HomKind, HomogeneousWitness,
    DEFAULT_EXACT_LIMIT,
};
pub use ktt::{count_independent_tsets, count_induced_ktt, list_induced_ktt, KttCount};
pub use spencer::{spencer_independent, SpencerResult};
pub use stars::{find_stars, find_stars_in, link_graph, verify_star, Star, StarSearch};
pub(crate) use stars::{largest_star_at, link_graph_full};
