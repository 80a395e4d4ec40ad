//! Independent reference computations of the minimum explosion count.
//!
//! These deliberately avoid the clique reduction used by the production
//! solver: one enumerates vertex subsets as covers of the complement's
//! edges, the other searches explosion sequences definitionally through
//! [`MixedState`]. The test suites require all three routes to agree.

use crate::graph::{MixedState, SimpleGraph, VertexId};

/// Minimum explosion count by enumerating vertex subsets: the smallest set
/// touching every missing edge. Desk-scale only; panics above 20 vertices.
pub fn upsilon_by_cover_enumeration(g: &SimpleGraph) -> u32 {
    let n = g.vertex_count();
    assert!(n <= 20, "cover enumeration is capped at 20 vertices");
    let non_edges: Vec<(u32, u32)> = g
        .non_edges()
        .into_iter()
        .map(|(a, b)| (a.index() - 1, b.index() - 1))
        .collect();
    let mut best = n;
    for mask in 0u32..1 << n {
        if mask.count_ones() >= best {
            continue;
        }
        if non_edges
            .iter()
            .all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1)
        {
            best = mask.count_ones();
        }
    }
    best
}

/// Minimum explosion count by iterative-deepening search over explosion
/// sequences, replayed step by step on [`MixedState`]. Never explodes an
/// already-universal vertex, which cannot shorten a sequence. Desk-scale
/// only; panics above 10 vertices.
pub fn upsilon_by_sequence_search(g: &SimpleGraph) -> u32 {
    let n = g.vertex_count();
    assert!(n <= 10, "sequence search is capped at 10 vertices");

    fn reaches_complete(state: &MixedState, depth: u32) -> bool {
        let underlying = state.underlying();
        if underlying.is_complete() {
            return true;
        }
        if depth == 0 {
            return false;
        }
        let universal = underlying.vertex_count() - 1;
        let profile = underlying.degree_profile();
        underlying
            .vertices()
            .filter(|&v| profile.degree(v) < universal)
            .any(|v| {
                let next = state.explode(v).expect("vertex in range");
                reaches_complete(&next, depth - 1)
            })
    }

    let start = MixedState::new(g.clone());
    (0..n).find(|&k| reaches_complete(&start, k)).unwrap_or(n)
}

/// Explosion count of `set` replayed in the given order; `None` when the
/// final graph is not complete. Used to audit witnesses definitionally.
pub fn replay_completes(g: &SimpleGraph, order: &[VertexId]) -> Option<u32> {
    let mut state = MixedState::new(g.clone());
    for &v in order {
        state = state.explode(v).ok()?;
    }
    state.underlying().is_complete().then_some(order.len() as u32)
}
