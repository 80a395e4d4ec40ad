//! Generators and closed-form explosion counts for named graph families.

pub mod jaco;
pub mod platonic;

use crate::engine;
use crate::graph::{disjoint_union, join_across, SimpleGraph};

pub use platonic::{platonic_graph, PlatonicSolid};

use thiserror::Error;

/// A named family instance with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Path on `n` vertices, labeled left to right.
    Path(u32),
    /// Cycle on `n >= 3` vertices, labeled clockwise.
    Cycle(u32),
    /// Complete graph on `n` vertices.
    Complete(u32),
    /// Edgeless graph on `n` vertices.
    Null(u32),
    /// Complete graph on even `n` minus the perfect matching
    /// `{(1,2), (3,4), ...}`.
    CompleteMinusMatching(u32),
    /// Complete multipartite graph with the given part sizes, numbered block
    /// by block.
    Multipartite(Vec<u32>),
    /// Underlying graph of the arc construction in [`jaco::jaco`].
    Jaco(u32),
    /// Skeleton of a platonic solid, with the frozen numbering documented in
    /// [`platonic`].
    Platonic(PlatonicSolid),
    /// Disjoint union of the given specs, blocks numbered consecutively.
    Union(Vec<FamilySpec>),
    /// Join of the given specs: union plus all cross-block edges.
    Join(Vec<FamilySpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} requires n >= {min}, got {got}")]
    TooSmall {
        family: &'static str,
        min: u32,
        got: u32,
    },
    #[error("complete-minus-matching requires an even vertex count, got {got}")]
    OddMatchingOrder { got: u32 },
    #[error("{family} requires at least one part")]
    EmptyParts { family: &'static str },
}

fn require(family: &'static str, min: u32, got: u32) -> Result<u32, FamilyError> {
    if got < min {
        Err(FamilyError::TooSmall { family, min, got })
    } else {
        Ok(got)
    }
}

/// Builds the labeled graph of `spec` with deterministic vertex numbering.
pub fn generate(spec: &FamilySpec) -> Result<SimpleGraph, FamilyError> {
    match spec {
        FamilySpec::Path(n) => {
            let n = require("path", 1, *n)?;
            Ok(SimpleGraph::build(n, (1..n).map(|i| (i, i + 1))).expect("valid path"))
        }
        FamilySpec::Cycle(n) => {
            let n = require("cycle", 3, *n)?;
            let edges = (1..n).map(|i| (i, i + 1)).chain([(1, n)]);
            Ok(SimpleGraph::build(n, edges).expect("valid cycle"))
        }
        FamilySpec::Complete(n) => {
            let n = require("complete", 1, *n)?;
            Ok(SimpleGraph::complete(n))
        }
        FamilySpec::Null(n) => {
            let n = require("null", 1, *n)?;
            Ok(SimpleGraph::edgeless(n))
        }
        FamilySpec::CompleteMinusMatching(n) => {
            let n = require("complete-minus-matching", 2, *n)?;
            if n % 2 != 0 {
                return Err(FamilyError::OddMatchingOrder { got: n });
            }
            let complete = SimpleGraph::complete(n);
            let edges = complete
                .edges()
                .map(|(u, v)| (u.index(), v.index()))
                .filter(|&(u, v)| !(v == u + 1 && u % 2 == 1));
            Ok(SimpleGraph::build(n, edges).expect("valid matching removal"))
        }
        FamilySpec::Multipartite(parts) => {
            if parts.is_empty() {
                return Err(FamilyError::EmptyParts {
                    family: "multipartite",
                });
            }
            let blocks = parts
                .iter()
                .map(|&p| require("multipartite part", 1, p).map(SimpleGraph::edgeless))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(join_across(&blocks))
        }
        FamilySpec::Jaco(n) => {
            let n = require("jaco", 1, *n)?;
            Ok(jaco::jaco(n).underlying())
        }
        FamilySpec::Platonic(solid) => Ok(platonic_graph(*solid)),
        FamilySpec::Union(specs) => {
            if specs.is_empty() {
                return Err(FamilyError::EmptyParts { family: "union" });
            }
            let parts = specs.iter().map(generate).collect::<Result<Vec<_>, _>>()?;
            Ok(disjoint_union(&parts))
        }
        FamilySpec::Join(specs) => {
            if specs.is_empty() {
                return Err(FamilyError::EmptyParts { family: "join" });
            }
            let parts = specs.iter().map(generate).collect::<Result<Vec<_>, _>>()?;
            Ok(join_across(&parts))
        }
    }
}

/// The closed-form explosion count of `spec`, or `None` where no formula is
/// known (platonic solids and general unions).
///
/// Callers are expected to pass specs accepted by [`generate`]. Boundary
/// cases below the formulas' stated ranges are the analytically forced
/// values: one- and two-vertex paths, the three-cycle, and one- and
/// two-vertex Jaco graphs are already complete, so they map to zero.
pub fn closed_form_upsilon(spec: &FamilySpec) -> Option<u32> {
    match spec {
        FamilySpec::Path(n) => Some(n.saturating_sub(2)),
        FamilySpec::Cycle(n) => Some(if *n >= 4 { n - 2 } else { 0 }),
        FamilySpec::Complete(_) => Some(0),
        FamilySpec::Null(n) => Some(n - 1),
        FamilySpec::CompleteMinusMatching(n) => Some(n / 2),
        FamilySpec::Multipartite(parts) => {
            Some(parts.iter().sum::<u32>() - parts.len() as u32)
        }
        FamilySpec::Jaco(n) => Some(if *n >= 3 {
            jaco::jaco_upsilon_formula(*n).expect("n >= 3")
        } else {
            0
        }),
        FamilySpec::Platonic(_) => None,
        FamilySpec::Union(_) => None,
        FamilySpec::Join(specs) => specs.iter().map(closed_form_upsilon).sum(),
    }
}

/// Exact explosion count of a platonic skeleton, produced by the solver
/// rather than a table.
pub fn platonic_upsilon(solid: PlatonicSolid) -> u32 {
    engine::exact_upsilon(&platonic_graph(solid))
        .expect("platonic graphs are within solver limits")
        .value()
}
