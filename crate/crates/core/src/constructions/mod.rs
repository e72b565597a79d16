//! Random lower-bound constructions: cyclic triangles of a tournament and the
//! pattern-copy r-graphs G_r, with subset scanners.

mod cyclic;
mod gr;
mod scan;

pub use cyclic::{cyclic_bound, cyclic_triangle_3graph, cyclic_triangles};
pub use gr::{build_gr, footnote_example_r3, GrInstance, MATERIALIZE_CAP};
pub use scan::{check_fact_gr, scan_counterexample, GrReport, Violation, SAMPLE_STREAMS};
