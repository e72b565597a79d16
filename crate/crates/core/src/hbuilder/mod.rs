//! Explicit ordered graphs of prescribed weight and their substitution
//! certificates.

mod build;
mod cert;
mod dseq;

pub use build::{build_h, check_h, HChecks, HConstruction};
pub use cert::{certify_star_forests, expand_certificate, f0, leaves_are_primitive, ForestKind, SubstitutionTree};
pub use dseq::{d_sequence, ln_bounds, threshold_lower, threshold_upper, verify_claim_d, vertex_weight, ClaimReport, DSequence};
