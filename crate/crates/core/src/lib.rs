//! Exact tools for the cops-and-robber game on small graphs.
//!
//! * [`graph`]: bitset graphs, graph6 I/O, canonical forms and a tiny generator.
//! * [`patterns`]: induced-subgraph freeness (independent sets, induced
//!   matchings, paths, cycles, explicit patterns, long holes).
//! * [`named`]: the Shrikhande graph on Z4 x Z4 plus small fixtures, with its
//!   structural checks.
//! * [`game`]: the cop-win attractor, cop number, domination number and
//!   checkable certificates for both outcomes.
//! * [`evasion`]: the explicit two-cop robber strategy on the Shrikhande
//!   complement and its exhaustive safety sweep.
//! * [`survey`]: streaming filter pipelines over graph families, threshold
//!   degrees and structural bound suites.
//! * [`claims`]: the desk-scale claim ledger behind `verify-paper`.

pub mod claims;
pub mod evasion;
pub mod game;
pub mod graph;
pub mod named;
pub mod patterns;
pub mod survey;

pub use graph::{Graph, GraphError, VertexSet};
