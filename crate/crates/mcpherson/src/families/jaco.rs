//! The recursive arc construction `J_n(1)` and its analytics.
//!
//! Vertex `v_i` arcs to `v_j` (for `i < j`) exactly when `2i - d⁻(v_i) >= j`,
//! where `d⁻(v_i)` counts arcs already received from lower-indexed vertices.
//! In-degrees are independent of the truncation point, so building the graph
//! front to back determines every arc; out-degrees get cut off at `v_n`, and
//! the untruncated out-degree of `v_i` can be read from any construction of
//! at least `2i` vertices.

use crate::graph::{SimpleGraph, VertexId};

use super::FamilyError;

/// The arc digraph of the construction, with per-vertex degree tallies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoDigraph {
    n: u32,
    arcs: Vec<(u32, u32)>,
    in_degrees: Vec<u32>,
    out_degrees: Vec<u32>,
}

impl JacoDigraph {
    /// Number of vertices.
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Arcs in ascending `(tail, head)` order; tails are always lower.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.arcs
            .iter()
            .map(|&(u, v)| (VertexId::new(u), VertexId::new(v)))
    }

    /// True when the arc `(u, v)` is present.
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.binary_search(&(u.index(), v.index())).is_ok()
    }

    /// Arcs received from lower-indexed vertices.
    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.in_degrees[(v.index() - 1) as usize]
    }

    /// Arcs sent to higher-indexed vertices (truncated at `v_n`).
    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.out_degrees[(v.index() - 1) as usize]
    }

    /// The simple graph obtained by forgetting arc directions.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::build(self.n, self.arcs.iter().copied())
            .expect("arcs are distinct ascending pairs")
    }
}

/// Builds the arc construction on `n >= 1` vertices.
pub fn jaco(n: u32) -> JacoDigraph {
    assert!(n >= 1);
    let mut arcs = Vec::new();
    let mut in_degrees = vec![0u32; n as usize];
    let mut out_degrees = vec![0u32; n as usize];
    for i in 1..=n {
        let reach = 2 * i - in_degrees[(i - 1) as usize];
        for j in i + 1..=reach.min(n) {
            arcs.push((i, j));
            in_degrees[(j - 1) as usize] += 1;
            out_degrees[(i - 1) as usize] += 1;
        }
    }
    arcs.sort_unstable();
    JacoDigraph {
        n,
        arcs,
        in_degrees,
        out_degrees,
    }
}

/// Degree analytics of one construction, for `n >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoProfile {
    n: u32,
    digraph: JacoDigraph,
    prime_jaconian: VertexId,
    lowest_arc_to_last: VertexId,
}

impl JacoProfile {
    /// Number of vertices.
    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// The underlying digraph.
    pub fn digraph(&self) -> &JacoDigraph {
        &self.digraph
    }

    /// In-degree of `v` in the truncated construction.
    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.digraph.in_degree(v)
    }

    /// Out-degree of `v` in the truncated construction.
    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.digraph.out_degree(v)
    }

    /// The lowest-indexed vertex of maximum degree in the underlying graph.
    pub fn prime_jaconian(&self) -> VertexId {
        self.prime_jaconian
    }

    /// The vertex interval above the prime vertex; these vertices induce a
    /// complete subgraph. Empty when the prime vertex is the last one.
    pub fn hope_range(&self) -> std::ops::RangeInclusive<u32> {
        self.prime_jaconian.index() + 1..=self.n
    }

    /// The smallest `i` such that the edge `v_i v_n` exists.
    pub fn lowest_arc_to_last(&self) -> VertexId {
        self.lowest_arc_to_last
    }
}

/// Computes the degree analytics of the construction on `n >= 3` vertices.
pub fn jaco_profile(n: u32) -> Result<JacoProfile, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooSmall {
            family: "jaco profile",
            min: 3,
            got: n,
        });
    }
    let digraph = jaco(n);
    let profile = digraph.underlying().degree_profile();
    let max = profile.max_degree();
    let prime_jaconian = profile
        .iter()
        .find(|&(_, d)| d == max)
        .map(|(v, _)| v)
        .expect("n >= 1");
    let lowest_arc_to_last = digraph
        .arcs()
        .find(|&(_, head)| head.index() == n)
        .map(|(tail, _)| tail)
        .expect("arc (n-1, n) always exists for n >= 2");
    Ok(JacoProfile {
        n,
        digraph,
        prime_jaconian,
        lowest_arc_to_last,
    })
}

/// The stepwise closed formula: with prime vertex `v_i`, the count is `i - 1`
/// when the edge `v_i v_n` exists and `i` otherwise. Agrees with
/// `lowest_arc_to_last - 1` on every `n`.
pub fn jaco_upsilon_formula(n: u32) -> Result<u32, FamilyError> {
    let profile = jaco_profile(n)?;
    let prime = profile.prime_jaconian();
    let value = if profile
        .digraph()
        .has_arc(prime, VertexId::new(n))
    {
        prime.index() - 1
    } else {
        prime.index()
    };
    debug_assert_eq!(value, profile.lowest_arc_to_last().index() - 1);
    Ok(value)
}

/// One row of the analytics table: the last vertex's in-degree, its
/// untruncated out-degree, the prime vertex, and the explosion count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoTableRow {
    pub n: u32,
    pub in_degree: u32,
    pub out_degree: u32,
    pub prime_jaconian: VertexId,
    pub upsilon: u32,
}

/// Computes table rows for every `n` in `3..=n_max`.
///
/// Out-degrees are read from one construction of `2 * n_max` vertices, which
/// is long enough that no row's last vertex is truncated.
pub fn jaco_table(n_max: u32) -> Result<Vec<JacoTableRow>, FamilyError> {
    if n_max < 3 {
        return Err(FamilyError::TooSmall {
            family: "jaco table",
            min: 3,
            got: n_max,
        });
    }
    let untruncated = jaco(2 * n_max);
    (3..=n_max)
        .map(|n| {
            let profile = jaco_profile(n)?;
            let last = VertexId::new(n);
            Ok(JacoTableRow {
                n,
                in_degree: profile.in_degree(last),
                out_degree: untruncated.out_degree(last),
                prime_jaconian: profile.prime_jaconian(),
                upsilon: jaco_upsilon_formula(n)?,
            })
        })
        .collect()
}

/// Per-`n` data of the uniqueness scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: u32,
    /// Untruncated out-degree of `v_n`.
    pub out_degree: u32,
    pub upsilon: u32,
    /// `out_degree` occurs for no other `n` in the scanned range.
    pub out_degree_unique: bool,
    /// `upsilon` occurs for no other `n` in the scanned range.
    pub upsilon_unique: bool,
}

/// Result of scanning the biconditional "the last vertex's out-degree is
/// unique exactly when the explosion count is unique" over `3..=n_max`.
///
/// Uniqueness is judged within the scanned range only, so results near the
/// range edges can change when the range grows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n_max: u32,
    pub rows: Vec<ConjectureRow>,
    /// Values of `n` where exactly one of the two uniqueness flags holds.
    pub violations: Vec<u32>,
}

impl ConjectureReport {
    /// The `n` whose out-degree is unique in the range.
    pub fn unique_out_degree_indices(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.out_degree_unique)
            .map(|r| r.n)
            .collect()
    }

    /// The `n` whose explosion count is unique in the range.
    pub fn unique_upsilon_indices(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| r.upsilon_unique)
            .map(|r| r.n)
            .collect()
    }
}

/// Runs the uniqueness scan over `3..=n_max`.
pub fn conjecture_scan(n_max: u32) -> Result<ConjectureReport, FamilyError> {
    let table = jaco_table(n_max)?;
    let count_of = |pick: fn(&JacoTableRow) -> u32, value: u32| {
        table.iter().filter(|r| pick(r) == value).count()
    };
    let rows: Vec<ConjectureRow> = table
        .iter()
        .map(|r| ConjectureRow {
            n: r.n,
            out_degree: r.out_degree,
            upsilon: r.upsilon,
            out_degree_unique: count_of(|r| r.out_degree, r.out_degree) == 1,
            upsilon_unique: count_of(|r| r.upsilon, r.upsilon) == 1,
        })
        .collect();
    let violations = rows
        .iter()
        .filter(|r| r.out_degree_unique != r.upsilon_unique)
        .map(|r| r.n)
        .collect();
    Ok(ConjectureReport {
        n_max,
        rows,
        violations,
    })
}
