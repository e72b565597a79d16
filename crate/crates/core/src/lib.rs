//! Order-size pairs and homogeneous sets in hypergraphs.
//!
//! The crate is organised by task: `hg` holds the value types, `search` the
//! homogeneous/star primitives, `order_size` the (m,f)-subset machinery,
//! `stepdown` the Erdős–Rado refinement, `hbuilder` the explicit ordered
//! graphs with substitution certificates, `structure` the density pipeline
//! for 3-graphs, `values` the distinct-value counters and `constructions`
//! the random lower-bound examples.

pub mod budget;
pub mod combin;
pub mod error;
pub mod hg;
pub mod rng;
pub mod scalar;

pub use budget::Budget;
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational used wherever the crate reports densities or parameters.
pub type Rational = num_rational::BigRational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub mod constructions;
pub mod hbuilder;
pub mod order_size;
pub mod search;
pub mod stepdown;
pub mod structure;
pub mod values;
pub mod verify;

/// Rational-coefficient forms.
pub type CubicParamsQ = values::CubicParams<Rational>;
pub type GeneralParamsQ = values::GeneralParams<Rational>;
/// Floating-point probes of the same forms.
pub type CubicParamsF64 = values::CubicParams<f64>;
pub type GeneralParamsF64 = values::GeneralParams<f64>;
