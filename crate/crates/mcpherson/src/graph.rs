//! Value-semantics graph types and the vertex-explosion primitive.
//!
//! Vertices carry 1-based labels `1..=n`. Every type here is an immutable
//! value: operations return new values, so anything in this module can be
//! shared freely across threads.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// 1-based label of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    /// Creates a vertex label.
    ///
    /// Panics if `index` is zero; labels are 1-based. Untrusted input goes
    /// through [`SimpleGraph::build`] or the edge-list parser instead, which
    /// report range errors rather than panicking.
    pub fn new(index: u32) -> Self {
        assert!(index >= 1, "vertex labels are 1-based");
        VertexId(index)
    }

    /// The 1-based label.
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

/// Reasons a graph construction or explosion is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("vertex {vertex} out of range 1..={n}")]
    OutOfRange { vertex: u32, n: u32 },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: u32, v: u32 },
}

/// Number of edges of the complete graph on `n` vertices.
pub fn complete_edge_count(n: u32) -> usize {
    let n = n as usize;
    n * (n - 1) / 2
}

/// Undirected simple graph on vertices `1..=n`.
///
/// Equality is labeled equality: two graphs are equal when they have the same
/// vertex count and the same edge set, not merely isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl SimpleGraph {
    /// Builds the graph with exactly the given edges.
    ///
    /// Endpoint pairs may come in either order; each is rejected with a
    /// distinct [`GraphError`] if it is a self-loop, out of range, or a
    /// duplicate of an earlier pair.
    pub fn build(n: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        assert!(n >= 1, "a graph has at least one vertex");
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
            }
            let (u, v) = (a.min(b), a.max(b));
            if !set.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
        }
        Ok(SimpleGraph { n, edges: set })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: u32) -> Self {
        assert!(n >= 1);
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        SimpleGraph { n, edges }
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: u32) -> Self {
        assert!(n >= 1);
        SimpleGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Number of vertices `n`.
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Iterates vertices `v1..=vn`.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    /// Iterates edges in ascending order as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v)))
    }

    /// True when `v` is a vertex of this graph.
    pub fn contains(&self, v: VertexId) -> bool {
        v.0 <= self.n
    }

    /// True when the edge `uv` is present. Returns false for `u == v`.
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = (u.0.min(v.0), u.0.max(v.0));
        a != b && self.edges.contains(&(a, b))
    }

    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v.0 || b == v.0)
            .count() as u32
    }

    /// The complement graph: edge present exactly when absent here.
    pub fn complement(&self) -> SimpleGraph {
        let edges = (1..=self.n)
            .flat_map(|u| (u + 1..=self.n).map(move |v| (u, v)))
            .filter(|p| !self.edges.contains(p))
            .collect();
        SimpleGraph { n: self.n, edges }
    }

    /// True when this graph is `K_n`.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == complete_edge_count(self.n)
    }

    /// All vertex pairs that are not edges, ascending.
    pub fn non_edges(&self) -> Vec<(VertexId, VertexId)> {
        (1..=self.n)
            .flat_map(|u| (u + 1..=self.n).map(move |v| (u, v)))
            .filter(|p| !self.edges.contains(p))
            .map(|(u, v)| (VertexId(u), VertexId(v)))
            .collect()
    }

    /// Per-vertex degrees together with the minimum and maximum.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0u32; self.n as usize];
        for &(u, v) in &self.edges {
            degrees[(u - 1) as usize] += 1;
            degrees[(v - 1) as usize] += 1;
        }
        let min = degrees.iter().copied().min().expect("n >= 1");
        let max = degrees.iter().copied().max().expect("n >= 1");
        DegreeProfile { degrees, min, max }
    }

    /// Neighbor bitmasks indexed by `v - 1`. Requires `n <= 64`.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitset adjacency requires n <= 64");
        let mut adj = vec![0u64; self.n as usize];
        for &(u, v) in &self.edges {
            adj[(u - 1) as usize] |= 1 << (v - 1);
            adj[(v - 1) as usize] |= 1 << (u - 1);
        }
        adj
    }
}

/// Degrees of one graph, with `min` = δ and `max` = Δ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<u32>,
    min: u32,
    max: u32,
}

impl DegreeProfile {
    /// Degree of `v`.
    pub fn degree(&self, v: VertexId) -> u32 {
        self.degrees[(v.0 - 1) as usize]
    }

    /// δ, the minimum degree.
    pub fn min_degree(&self) -> u32 {
        self.min
    }

    /// Δ, the maximum degree.
    pub fn max_degree(&self) -> u32 {
        self.max
    }

    /// Iterates `(vertex, degree)` in label order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| (VertexId(i as u32 + 1), d))
    }
}

/// Disjoint union of the given graphs, relabeling vertex blocks consecutively.
pub fn disjoint_union(parts: &[SimpleGraph]) -> SimpleGraph {
    assert!(!parts.is_empty(), "union of no graphs");
    let n: u32 = parts.iter().map(|g| g.n).sum();
    let mut edges = BTreeSet::new();
    let mut offset = 0u32;
    for g in parts {
        for &(u, v) in &g.edges {
            edges.insert((u + offset, v + offset));
        }
        offset += g.n;
    }
    SimpleGraph { n, edges }
}

/// Disjoint union plus every cross-block pair as an edge (the join).
pub fn join_across(parts: &[SimpleGraph]) -> SimpleGraph {
    let mut joined = disjoint_union(parts);
    let mut start = 1u32;
    let mut block_ranges = Vec::with_capacity(parts.len());
    for g in parts {
        block_ranges.push(start..start + g.n);
        start += g.n;
    }
    for (i, a) in block_ranges.iter().enumerate() {
        for b in &block_ranges[i + 1..] {
            for u in a.clone() {
                for v in b.clone() {
                    joined.edges.insert((u, v));
                }
            }
        }
    }
    joined
}

/// A base graph plus the arcs created by explosions so far.
///
/// Exploding a vertex makes it arc to every vertex it is not yet adjacent to
/// in the current underlying graph, so it ends up universal. Exploding an
/// already-universal vertex is a no-op apart from the log entry; callers that
/// need stricter eligibility enforce it themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedState {
    base: SimpleGraph,
    arcs: BTreeSet<(u32, u32)>,
    log: Vec<VertexId>,
}

impl MixedState {
    /// A fresh state over `base` with no explosions performed.
    pub fn new(base: SimpleGraph) -> Self {
        MixedState {
            base,
            arcs: BTreeSet::new(),
            log: Vec::new(),
        }
    }

    /// The original graph.
    pub fn base(&self) -> &SimpleGraph {
        &self.base
    }

    /// Arcs created so far, ascending by `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs.iter().map(|&(u, v)| (VertexId(u), VertexId(v)))
    }

    /// Number of arcs created so far.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Explosion order so far.
    pub fn log(&self) -> &[VertexId] {
        &self.log
    }

    fn neighbors_in_underlying(&self, v: u32) -> BTreeSet<u32> {
        let mut nbrs = BTreeSet::new();
        for &(a, b) in &self.base.edges {
            if a == v {
                nbrs.insert(b);
            } else if b == v {
                nbrs.insert(a);
            }
        }
        for &(a, b) in &self.arcs {
            if a == v {
                nbrs.insert(b);
            } else if b == v {
                nbrs.insert(a);
            }
        }
        nbrs
    }

    /// Returns the state after exploding `v`: one new arc `(v, z)` for every
    /// `z` that is not adjacent to `v` in the current underlying graph.
    pub fn explode(&self, v: VertexId) -> Result<MixedState, GraphError> {
        let n = self.base.n;
        if v.0 < 1 || v.0 > n {
            return Err(GraphError::OutOfRange { vertex: v.0, n });
        }
        let nbrs = self.neighbors_in_underlying(v.0);
        let mut next = self.clone();
        for z in 1..=n {
            if z != v.0 && !nbrs.contains(&z) {
                debug_assert!(!next.arcs.contains(&(z, v.0)), "anti-parallel arc");
                next.arcs.insert((v.0, z));
            }
        }
        next.log.push(v);
        Ok(next)
    }

    /// The underlying simple graph: base edges plus every arc with its
    /// direction forgotten. Equals the base when nothing has exploded.
    pub fn underlying(&self) -> SimpleGraph {
        let mut edges = self.base.edges.clone();
        for &(u, v) in &self.arcs {
            edges.insert((u.min(v), u.max(v)));
        }
        SimpleGraph {
            n: self.base.n,
            edges,
        }
    }
}

/// One explosion in a trace: the vertex and the arcs it created.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    vertex: VertexId,
    arcs_added: Vec<(VertexId, VertexId)>,
}

impl TraceStep {
    /// The exploded vertex.
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    /// Arcs created by this step, ascending.
    pub fn arcs_added(&self) -> &[(VertexId, VertexId)] {
        &self.arcs_added
    }
}

/// Ordered record of an explosion run from an initial graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplosionTrace {
    initial: SimpleGraph,
    steps: Vec<TraceStep>,
    final_complete: bool,
}

impl ExplosionTrace {
    /// Replays `sequence` from `initial`, recording the arcs each explosion
    /// creates and whether the final underlying graph is complete.
    pub fn record(initial: SimpleGraph, sequence: &[VertexId]) -> Result<Self, GraphError> {
        let mut state = MixedState::new(initial.clone());
        let mut steps = Vec::with_capacity(sequence.len());
        for &v in sequence {
            let before = state.arcs.clone();
            state = state.explode(v)?;
            let arcs_added = state
                .arcs
                .difference(&before)
                .map(|&(a, b)| (VertexId(a), VertexId(b)))
                .collect();
            steps.push(TraceStep {
                vertex: v,
                arcs_added,
            });
        }
        let final_complete = state.underlying().is_complete();
        Ok(ExplosionTrace {
            initial,
            steps,
            final_complete,
        })
    }

    /// The graph the trace starts from.
    pub fn initial(&self) -> &SimpleGraph {
        &self.initial
    }

    /// The recorded steps in order.
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    /// Number of explosions.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// True when no explosion was recorded.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// True when the underlying graph after the last step is complete.
    pub fn final_complete(&self) -> bool {
        self.final_complete
    }

    /// The exploded vertices in order.
    pub fn vertices(&self) -> Vec<VertexId> {
        self.steps.iter().map(|s| s.vertex).collect()
    }

    /// All arcs created over the run, in step order: the explosion digraph.
    pub fn explosion_arcs(&self) -> Vec<(VertexId, VertexId)> {
        self.steps
            .iter()
            .flat_map(|s| s.arcs_added.iter().copied())
            .collect()
    }

    /// The underlying graph after the last step.
    pub fn final_graph(&self) -> SimpleGraph {
        let mut state = MixedState::new(self.initial.clone());
        for step in &self.steps {
            state = state.explode(step.vertex).expect("recorded vertex in range");
        }
        state.underlying()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::example_graph;

    fn v(i: u32) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn build_accepts_example_graph() {
        let g = example_graph();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn build_single_vertex() {
        let g = SimpleGraph::build(1, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_complete());
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            SimpleGraph::build(3, [(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            SimpleGraph::build(3, [(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 0, n: 3 })
        );
        assert_eq!(
            SimpleGraph::build(3, [(1, 4)]),
            Err(GraphError::OutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn build_rejects_duplicate_even_reversed() {
        assert_eq!(
            SimpleGraph::build(3, [(1, 2), (2, 1)]),
            Err(GraphError::DuplicateEdge { u: 1, v: 2 })
        );
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        assert_eq!(SimpleGraph::complete(4).complement(), SimpleGraph::edgeless(4));
    }

    #[test]
    fn complement_of_example_graph() {
        let c = example_graph().complement();
        let expected =
            SimpleGraph::build(6, [(1, 6), (2, 3), (2, 4), (3, 6), (4, 5), (4, 6), (5, 6)])
                .unwrap();
        assert_eq!(c, expected);
        assert_eq!(c.edge_count(), 7);
    }

    #[test]
    fn explode_example_vertex_six() {
        let state = MixedState::new(example_graph());
        let after = state.explode(v(6)).unwrap();
        let arcs: Vec<_> = after.arcs().map(|(a, b)| (a.index(), b.index())).collect();
        assert_eq!(arcs, vec![(6, 1), (6, 3), (6, 4), (6, 5)]);
        assert_eq!(after.log(), &[v(6)]);
    }

    #[test]
    fn explode_universal_vertex_adds_nothing() {
        let state = MixedState::new(SimpleGraph::complete(3));
        let after = state.explode(v(1)).unwrap();
        assert_eq!(after.arc_count(), 0);
        assert_eq!(after.log(), &[v(1)]);
    }

    #[test]
    fn explode_example_sequence_v6_v2() {
        let state = MixedState::new(example_graph());
        let after = state.explode(v(6)).unwrap().explode(v(2)).unwrap();
        let new_arcs: Vec<_> = after
            .arcs()
            .filter(|(a, _)| a.index() == 2)
            .map(|(a, b)| (a.index(), b.index()))
            .collect();
        assert_eq!(new_arcs, vec![(2, 3), (2, 4)]);
    }

    #[test]
    fn explode_out_of_range_vertex() {
        let state = MixedState::new(SimpleGraph::edgeless(2));
        assert_eq!(
            state.explode(v(3)),
            Err(GraphError::OutOfRange { vertex: 3, n: 2 })
        );
    }

    #[test]
    fn underlying_of_fresh_state_is_base() {
        let p4 = SimpleGraph::build(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(MixedState::new(p4.clone()).underlying(), p4);
    }

    #[test]
    fn underlying_after_example_sequence_is_complete() {
        let state = MixedState::new(example_graph())
            .explode(v(6))
            .unwrap()
            .explode(v(2))
            .unwrap()
            .explode(v(4))
            .unwrap();
        assert_eq!(state.underlying(), SimpleGraph::complete(6));
    }

    #[test]
    fn underlying_null_two_after_explosion() {
        let state = MixedState::new(SimpleGraph::edgeless(2)).explode(v(1)).unwrap();
        assert_eq!(state.underlying(), SimpleGraph::complete(2));
    }

    #[test]
    fn is_complete_cases() {
        assert!(SimpleGraph::complete(5).is_complete());
        assert!(!SimpleGraph::build(3, [(1, 2), (2, 3)]).unwrap().is_complete());
        assert!(!example_graph().is_complete());
    }

    #[test]
    fn non_edges_counts() {
        assert_eq!(example_graph().non_edges().len(), 7);
        assert!(SimpleGraph::complete(5).non_edges().is_empty());
        let ne: Vec<_> = SimpleGraph::edgeless(3)
            .non_edges()
            .iter()
            .map(|(a, b)| (a.index(), b.index()))
            .collect();
        assert_eq!(ne, vec![(1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn degree_profile_example() {
        let profile = example_graph().degree_profile();
        let degrees: Vec<_> = profile.iter().map(|(_, d)| d).collect();
        assert_eq!(degrees, vec![4, 3, 3, 2, 3, 1]);
        assert_eq!(profile.min_degree(), 1);
        assert_eq!(profile.max_degree(), 4);
    }

    #[test]
    fn degree_profile_regular_graphs() {
        let c5 = SimpleGraph::build(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(c5.degree_profile().iter().all(|(_, d)| d == 2));
        assert!(SimpleGraph::complete(4).degree_profile().iter().all(|(_, d)| d == 3));
    }

    #[test]
    fn disjoint_union_of_singletons_is_edgeless() {
        let k1 = SimpleGraph::complete(1);
        let u = disjoint_union(&[k1.clone(), k1.clone(), k1]);
        assert_eq!(u, SimpleGraph::edgeless(3));
    }

    #[test]
    fn disjoint_union_relabels_blocks() {
        let p2 = SimpleGraph::build(2, [(1, 2)]).unwrap();
        let u = disjoint_union(&[p2.clone(), p2.clone()]);
        assert_eq!(u, SimpleGraph::build(4, [(1, 2), (3, 4)]).unwrap());
        assert_eq!(disjoint_union(&[p2.clone()]), p2);
    }

    #[test]
    fn join_across_builds_complete_multipartite() {
        let k23 = join_across(&[SimpleGraph::edgeless(2), SimpleGraph::edgeless(3)]);
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(v(1), v(2)));
        assert!(k23.has_edge(v(1), v(3)));

        let k2 = join_across(&[SimpleGraph::complete(1), SimpleGraph::complete(1)]);
        assert_eq!(k2, SimpleGraph::complete(2));

        let k234 = join_across(&[
            SimpleGraph::edgeless(2),
            SimpleGraph::edgeless(3),
            SimpleGraph::edgeless(4),
        ]);
        assert_eq!(k234.edge_count(), 2 * 3 + 2 * 4 + 3 * 4);
    }

    #[test]
    fn trace_records_arcs_per_step() {
        let trace = ExplosionTrace::record(example_graph(), &[v(6), v(2), v(4)]).unwrap();
        assert_eq!(trace.len(), 3);
        assert!(trace.final_complete());
        assert_eq!(trace.steps()[0].arcs_added().len(), 4);
        assert_eq!(trace.steps()[1].arcs_added().len(), 2);
        assert_eq!(trace.steps()[2].arcs_added().len(), 1);
        assert_eq!(trace.explosion_arcs().len(), 7);
        assert_eq!(trace.final_graph(), SimpleGraph::complete(6));
    }

    #[test]
    fn trace_arc_total_matches_missing_edge_count() {
        let g = example_graph();
        let missing = complete_edge_count(6) - g.edge_count();
        let trace = ExplosionTrace::record(g, &[v(6), v(2), v(4)]).unwrap();
        assert_eq!(trace.explosion_arcs().len(), missing);
    }
}
