//! Distinct-value counters, g_r, and blow-up edge counts.

pub mod blowup;
mod count;
mod cubic;
mod gr;

pub use blowup::{blowup_edge_count, pair_blowup_edge_count, BlowupCount};
pub use count::{
    count_values_general, count_values_lemma32, count_values_lemma33, f_lemma33, for_each_composition, square_sums,
    EnumerationMode, ValueCountReport, ValueWitness, COMPOSITION_CAP,
};
pub use cubic::{f_general, f_lemma32, transform_params, CubicParams, GeneralParams, Sums};
pub use gr::{for_each_partition, g_r, g_r_table};
