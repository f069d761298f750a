//! Right-oriented (R.O) metrics and generalized R.O-metric spaces on finite
//! ground sets.
//!
//! An R.O-metric drops symmetry and identity of indiscernibles, and only
//! asks for the triangle inequality when the detour has positive length.
//! Its balls form a subbasis for a topology. Every finite topology arises
//! this way, and adding a family of self-maps (a generalized space)
//! realizes every topology through an embedding into a product of
//! Sierpinski spaces.
//!
//! Modules:
//! - [`topology`]: finite topologies, subbasis closure, Kolmogorov quotients
//! - [`metric`]: axiom checks, classification, balls, generated topology
//! - [`metrization`]: building metrics that generate a given topology
//! - [`generalized`]: map families, generalized balls, the Sierpinski embedding
//! - [`line`]: exact balls of two R.O-metrics on the rational line
//! - [`oracle`]: topology census and brute-force searches
//! - [`json`]: document formats shared with the command-line tool

pub mod error;
pub mod generalized;
pub mod ground;
pub mod json;
pub mod line;
pub mod metric;
pub mod metrization;
pub mod oracle;
pub mod rational;
pub mod topology;

pub use error::{Error, Result};
pub use ground::{GroundSet, PointSet};
pub use metric::{ROMetric, RawDistanceMatrix};
pub use rational::Rational;
pub use topology::FiniteTopology;
