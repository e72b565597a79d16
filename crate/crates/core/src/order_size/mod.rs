//! Size spectra, (m, f)-subsets and their weighted counterparts in
//! stepped-down ordered graphs.

mod patterns;
mod realize;
mod spectrum;
mod weighted;
mod weights;

pub use patterns::{pattern_with_weight, realizable_weights, scan_patterns, PatternScan, PATTERN_VERTEX_CAP};
pub use realize::{realize_from_step, realize_r_plus_1, Realization};
pub use spectrum::{find_mf_subset, size_spectrum, SpectrumMode, SpectrumReport, DEFAULT_SPECTRUM_CAP};
pub use weighted::{find_induced_ordered_copy, find_weighted_mf_subset, WeightedOutcome, WeightedWitness};
pub use weights::{check_pair_factorization, coloring_count, verify_lift, weighted_total, LiftCheck, WeightFrame};
