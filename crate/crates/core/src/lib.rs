//! Matroids on small ground sets (at most 31 elements), with exact
//! combinatorial analysis done by exhaustive bitmask enumeration.
//!
//! The crate provides:
//!
//! * [`Matroid`] — rank oracle backed either by an explicit bases family or
//!   by a multigraph (cycle matroid, optionally dualized), with minors,
//!   duality, closure operators and circuit/cocircuit/hyperplane enumeration;
//! * [`connectivity`] — the connectivity function λ, local connectivity ⊓,
//!   k-separation sweeps, vertical 3-partitions, segments, cosegments and fans;
//! * [`families`] — the graphs K̃₃,ₙ (K₃,ₙ plus a triangle on the size-3
//!   part), their bond matroids, and membership tests for that family;
//! * [`catalog`] and [`iso`] — a test universe of named, graphic, cographic
//!   and uniform matroids, matroid isomorphism and minor containment;
//! * [`verifier`] — statement-level checks of connectivity lemmas over a
//!   matroid, with machine-readable verdict reports;
//! * [`format`](mod@format) — the `MATROID v1` / `GRAPH v1` text formats.

pub mod axioms;
pub mod catalog;
pub mod connectivity;
pub mod families;
pub mod format;
pub mod graph;
pub mod iso;
pub mod matroid;
pub mod rng;
pub mod set;
pub mod verifier;

mod error;

pub use error::Error;
pub use graph::Multigraph;
pub use matroid::{IdMap, Matroid};
pub use set::ElementSet;

/// Ground sets are capped so every subset fits in a single `u32` mask.
pub const MAX_ELEMENTS: usize = 31;
