//! Exact algorithms around spanning k-edge-colorable subgraphs of loopless
//! multigraphs.
//!
//! The central quantity is the spanning parameter `sp`: the least k for
//! which a graph without isolated vertices has a spanning subgraph with
//! all degrees in [1, k] — equivalently a spanning k-edge-colorable
//! subgraph, equivalently a spanning *maximum* k-edge-colorable subgraph.
//! The crate computes it by all three definitions independently, builds the
//! certifying objects (factors, colorings, exchange sequences, peel
//! certificates, degree splits), and sweeps exhaustive small-graph families
//! to verify every equality and bound it exposes.
//!
//! Modules:
//!
//! * [`graph`] — loopless multigraphs with stable edge indices, subgraph
//!   helpers, elementary queries.
//! * [`format`] — the plain-text graph format and canonical serialization.
//! * [`generators`] — elementary families, seeded random multigraphs, and
//!   the extremal constructions.
//! * [`matching`] — exact maximum matching (blossom contraction), perfect
//!   matching witnesses, exhaustive deficiency.
//! * [`coloring`] — chromatic index, k-edge-colorings, maximum
//!   k-edge-colorable subgraphs.
//! * [`sp`] — the spanning parameter by every route, with witnesses and
//!   the exchange procedure.
//! * [`trees`] — the peel recognizer for trees with sp equal to the
//!   maximum degree, the layered star decomposition, graft case analysis.
//! * [`bounds`] — upper bounds, bounded-degree partitions, the
//!   degree-condition criterion.
//! * [`enumerate`] — isomorphism-free enumeration of small graphs and
//!   trees.
//! * [`verify`] — the campaign runner behind the CLI and the acceptance
//!   suite.
//!
//! The primary interface is the `examples/` directory, one runnable
//! program per capability:
//!
//! ```text
//! cargo run --example sp_basics              # sp by all four routes
//! cargo run --example factor_witnesses      # factor + spanning maximum witnesses
//! cargo run --example exchange_walkthrough  # the coverage/overlap swap
//! cargo run --example tree_certificates     # recognizer + certificate replay
//! cargo run --example star_decomposition    # the layered construction
//! cargo run --example bounds_table          # every bound, with tightness
//! cargo run --example degree_partitions     # vertex partition + degree split
//! cargo run --example extremal_families     # ratio trees and the gap family
//! cargo run --example cubic_pipeline        # constructive spanning maxima
//! cargo run --example matching_and_coloring # matchings, chromatic index
//! cargo run --example graph_files           # text format, seeded generators
//! cargo run --example exhaustive_sweep      # an in-process campaign
//! ```
//!
//! The `spancolor` binary wraps the same functionality behind `compute`,
//! `verify`, and `generate` subcommands.

pub mod bounds;
pub mod coloring;
pub mod enumerate;
mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod matching;
pub mod sp;
pub mod trees;
pub mod verify;

pub use error::{Caps, Error, Result};
pub use graph::{EdgeSet, Multigraph, VertexSet};
