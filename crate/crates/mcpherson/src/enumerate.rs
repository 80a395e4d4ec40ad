//! Exhaustive enumeration of labeled graphs on few vertices.
//!
//! Vertex pairs are ordered lexicographically, `(1,2) (1,3) ... (n-1,n)`, and
//! a graph on `n` vertices is identified by the bitmask selecting its edges
//! in that order. The mask doubles as a stable instance label in scans.

use crate::graph::{SimpleGraph, VertexId};

/// The lexicographic pair order used for masks.
pub fn pair_order(n: u32) -> Vec<(VertexId, VertexId)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (VertexId::new(u), VertexId::new(v))))
        .collect()
}

/// The graph on `n` vertices whose edges are the set bits of `mask` in
/// [`pair_order`] positions. Requires `n <= 10` so the mask fits in a `u64`.
pub fn graph_from_mask(n: u32, mask: u64) -> SimpleGraph {
    assert!(n <= 10, "graph masks are capped at 10 vertices");
    let edges = pair_order(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, (u, v))| (u.index(), v.index()));
    SimpleGraph::build(n, edges).expect("pairs are valid by construction")
}

/// The mask identifying `g` under [`pair_order`]. Inverse of
/// [`graph_from_mask`].
pub fn mask_of_graph(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 10, "graph masks are capped at 10 vertices");
    pair_order(n)
        .into_iter()
        .enumerate()
        .filter(|&(_, (u, v))| g.has_edge(u, v))
        .map(|(i, _)| 1u64 << i)
        .sum()
}

/// Iterates all `2^(n(n-1)/2)` labeled graphs on `n` vertices in mask order.
/// Capped at 7 vertices to keep the count enumerable.
pub fn all_labeled_graphs(n: u32) -> impl Iterator<Item = SimpleGraph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration is capped at 7 vertices");
    let pairs = (n * (n - 1) / 2) as u64;
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask))
}
