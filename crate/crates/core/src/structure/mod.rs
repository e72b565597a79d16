//! Density pipeline for 3-graphs: homogenization, star and pair chains, and
//! the two structures of the main lemma.

mod chains;
mod family;
mod homogenize;
mod main_structure;
mod refine;
pub mod synthetic;

pub use chains::{
    find_pair_chain, find_pair_chain_in, find_star_chain, find_star_chain_in, no_large_star_subset, no_large_star_subset_in,
    star_free_subset, star_free_subset_in, verify_pair_chain, verify_star_chain, FreeSide, LargeStarFree, PairChain, StarChain,
    StarFree,
};
pub use family::{Digest, HomogenizedFamily, PairFamily};
pub use homogenize::{homogenize_pair_types, homogenize_types};
pub use main_structure::{item_a_constants, main_structure, Item, MainOutcome, MainStructure, StructureParams};
pub use refine::refine_to_01;
pub use synthetic::{PairConstants, TypeConstants};
