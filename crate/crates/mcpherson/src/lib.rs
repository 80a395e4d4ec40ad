//! Vertex-explosion calculus on simple graphs.
//!
//! An explosion makes one vertex arc to every vertex it is not yet adjacent
//! to, so it becomes universal in the underlying graph. This crate computes
//! the minimum and maximum number of explosions needed to complete a graph,
//! the discrepancy between them, greedy runs under pluggable tie-breaking,
//! family generators with their closed-form counts, and the analytics of the
//! recursive arc construction in [`families::jaco`].
//!
//! Module map:
//! - [`graph`]: the value types — [`SimpleGraph`], [`MixedState`],
//!   [`ExplosionTrace`] — and the explosion operation itself.
//! - [`io`]: the plain-text edge-list format.
//! - [`engine`]: exact solvers, greedy and inverse recursions, stability,
//!   and the greedy-versus-exact scanner.
//! - [`oracle`]: independent reference solvers the exact path is audited
//!   against.
//! - [`families`]: named families, closed forms, platonic skeleta, and the
//!   Jaco analytics.
//! - [`enumerate`]: exhaustive labeled-graph enumeration for scans.

mod clique;

pub mod engine;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;

pub use engine::{
    exact_upsilon, exact_upsilon_star, greedy_mcpherson, inverse_mcpherson, stability_report,
    EngineError, StabilityReport, TieBreakPolicy, UpsilonCertificate,
};
pub use graph::{
    disjoint_union, join_across, ExplosionTrace, GraphError, MixedState, SimpleGraph, VertexId,
};

#[cfg(test)]
pub(crate) mod test_util {
    use crate::graph::SimpleGraph;

    /// The 6-vertex, 8-edge graph used as the running example across the
    /// test suites: minimum 3 explosions, maximum 5.
    pub fn example_graph() -> SimpleGraph {
        SimpleGraph::build(
            6,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap()
    }
}
