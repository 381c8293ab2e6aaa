#![forbid(unsafe_code)]

//! Proper orientations of simple graphs at desk scale.
//!
//! An orientation of a graph is *proper* when adjacent vertices receive
//! distinct indegrees; the proper orientation number is the smallest
//! achievable maximum indegree over all proper orientations. This crate
//! provides:
//!
//! - [`graph`]: immutable graph and orientation values with the properness
//!   verifier and structural queries (bipartiteness, regularity, line graph);
//! - [`bounds`]: the chromatic / max-degree sandwich, the regular-graph
//!   lower bound, and the star-forest characterization of value 1;
//! - [`solver`]: exact branch-and-bound decision and minimization plus an
//!   independent brute-force oracle;
//! - [`constructions`]: optimal edge coloring with class certification,
//!   perfect-matching decompositions, the bipartite odd-regular and
//!   line-graph orientations, the greedy approximation, and the
//!   polynomial-time algorithm for cubic graphs;
//! - [`reduction`]: the 3-SAT-to-graph construction whose proper orientation
//!   number is 2 exactly when the formula is satisfiable, with certificate
//!   translation both ways;
//! - [`io`]: edge-list, orientation, DOT and role-sidecar formats;
//! - [`catalog`]: the usual small named graphs.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.

pub mod bounds;
pub mod catalog;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod solver;

pub use graph::{Graph, GraphError, Orientation, Side, VertexPartition};
pub use solver::{SolveOptions, SolveResult};
