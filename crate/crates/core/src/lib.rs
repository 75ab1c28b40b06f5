//! Executable experiments on when the random graph `G(N, p)` is Ramsey for
//! a clique versus a path: every red/blue colouring of its edges contains a
//! red path with `n` edges or a blue `K_{r+1}`.
//!
//! - [`graph`]: graphs, colourings, the seeded `G(N, p)` sampler, file IO.
//! - [`detectors`]: clique, long-path and expansion searches with certificates.
//! - [`separation`]: the DFS separation and the blue multipartite decomposition.
//! - [`adversary`]: explicit avoiding colourings and the structural classifier.
//! - [`arrow`]: exact and portfolio decisions of the arrow relation.
//! - [`theory`]: closed-form counts and thresholds.
//! - [`harness`]: Monte Carlo trials, sweeps, CSV/SVG output.
//!
//! Paths are measured in edges throughout: `P_n` has `n` edges and `n + 1`
//! vertices.

pub mod adversary;
pub mod arrow;
pub mod bitset;
pub mod detectors;
pub mod graph;
pub mod harness;
pub mod separation;
pub mod theory;
pub mod witness;

pub use bitset::VertexSet;
pub use graph::{Colour, Graph, Seed, TwoColouring};
pub use witness::{SearchOutcome, SearchVerdict, Witness};
