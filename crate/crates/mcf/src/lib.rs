//! Clustering in metric spaces by a-contrario detection on the minimum
//! spanning tree.
//!
//! The pipeline builds the exact MST of a point set, derives the single-link
//! hierarchy from it, and scores every non-singleton component against a
//! Monte-Carlo background model of unclustered data. Components whose number
//! of false alarms (NFA) falls below a threshold are kept; nested detections
//! are pruned by an exclusion principle. The result is a *meaningful clustered
//! forest*: a set of disjoint clusters plus the points left unexplained.
//!
//! Two iterative refinements are built on top of the core detector:
//!
//! * [`stabilization`] replaces detected clusters with synthetic background
//!   noise confined to their Voronoi cells and re-detects, which repairs
//!   noise-induced over-splitting.
//! * [`unmasking`] iteratively peels off the most meaningful cluster so that
//!   structures dominated by a highly populated cluster become detectable.
//!
//! The crate is deterministic end to end: every randomized step is driven by
//! explicit seeds, and re-running any pipeline with the same inputs produces
//! identical output.

pub mod background;
pub mod dataset;
pub mod detection;
pub mod eval;
pub mod hierarchy;
pub mod mst;
pub mod plot;
pub mod stabilization;
pub mod union_find;
pub mod unmasking;

mod error;
mod rng;

pub use error::McfError;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, McfError>;
