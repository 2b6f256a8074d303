//! Hypergraph overlap analysis and generation.
//!
//! This crate measures how strongly the hyperedges of a hypergraph
//! overlap and generates synthetic hypergraphs that reproduce observed
//! overlap structure:
//!
//! * [`hypergraph`]: the core data model (nodes, hyperedges, incidence).
//! * [`partition`]: hierarchical near-equal node partitions.
//! * [`ingest`]: loading and writing datasets.
//! * [`measures`]: density, overlapness, baseline measures, egonet
//!   statistics, pair/triple degrees, homogeneity, significance scores.
//! * [`tailstats`]: empirical distribution comparison (KS distance) and
//!   maximum-likelihood heavy-tail fits.
//! * [`generators`]: degree/size-preserving random hypergraph
//!   generators, with and without hierarchical locality, plus upscaling.
//! * [`fitting`]: automatic level-weight fitting against a target
//!   hypergraph's homogeneity distribution.
//!
//! Scalar-valued measures are generic over [`scalar::MeasureScalar`];
//! [`Real`] and [`Exact`] are the concrete instantiations used
//! throughout.

pub mod error;
pub mod fitting;
pub mod generators;
pub mod hypergraph;
pub mod ingest;
pub mod measures;
pub mod partition;
mod rng;
pub mod sample;
pub mod scalar;
pub mod tailstats;

pub use error::{Error, Result};
pub use hypergraph::{build_incidence, Hypergraph, HyperedgeRecord, NodeId};
pub use partition::{make_partition, LevelPartition};
pub use sample::DistributionSample;

/// Default floating-point scalar.
pub type Real = f64;

/// Exact rational scalar for count-ratio measures.
pub type Exact = num_rational::Ratio<u64>;
