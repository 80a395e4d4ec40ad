//! Exact and greedy solvers for explosion counts.
//!
//! The exact minimum rests on a reduction: exploding a vertex set `S` (in any
//! order) completes the graph exactly when the remaining vertices induce a
//! clique, so the minimum count equals `n` minus the clique number, which is
//! also the minimum vertex cover of the complement. The reduction is derived,
//! not assumed: [`order_invariance_check`] and the sequence oracle in
//! [`crate::oracle`] validate it against the definitional search.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::clique;
use crate::graph::{complete_edge_count, ExplosionTrace, MixedState, SimpleGraph, VertexId};

/// Default vertex cap for the clique-based exact solver.
pub const DEFAULT_EXACT_LIMIT: u32 = 64;

/// Default vertex cap for searches over explosion sequences.
pub const DEFAULT_SEQUENCE_LIMIT: u32 = 12;

/// How a greedy run picks among equally eligible vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TieBreakPolicy {
    /// Always the smallest label.
    LowestIndex,
    /// Always the largest label.
    HighestIndex,
    /// Follow the given vertices while they last, then fall back to the
    /// smallest label. Each listed vertex must be eligible at its step.
    ExplicitSequence(Vec<VertexId>),
    /// Bounded search over every eligible choice, returning an extreme run:
    /// shortest for the explosion recursion, longest for the inverse.
    ExhaustiveBest,
}

impl std::fmt::Display for TieBreakPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TieBreakPolicy::LowestIndex => write!(f, "lowest-index"),
            TieBreakPolicy::HighestIndex => write!(f, "highest-index"),
            TieBreakPolicy::ExplicitSequence(_) => write!(f, "explicit-sequence"),
            TieBreakPolicy::ExhaustiveBest => write!(f, "exhaustive-best"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph on {n} vertices exceeds the solver limit of {limit}")]
    SolverLimitExceeded { n: u32, limit: u32 },
    #[error("policy violation at step {step}: {vertex} is not an eligible choice")]
    PolicyViolation { step: usize, vertex: VertexId },
}

/// Exact minimum explosion count with a witness set and one optimal run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpsilonCertificate {
    value: u32,
    witness_set: BTreeSet<VertexId>,
    trace: ExplosionTrace,
}

impl UpsilonCertificate {
    /// The minimum number of explosions.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// A minimum set of vertices whose explosion, in any order, completes the
    /// graph.
    pub fn witness_set(&self) -> &BTreeSet<VertexId> {
        &self.witness_set
    }

    /// The witness replayed in ascending order. Its arcs form the explosion
    /// digraph of one optimal run.
    pub fn trace(&self) -> &ExplosionTrace {
        &self.trace
    }
}

/// Minimum and maximum explosion counts of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityReport {
    upsilon: u32,
    upsilon_star: u32,
}

impl StabilityReport {
    /// The exact minimum count.
    pub fn upsilon(&self) -> u32 {
        self.upsilon
    }

    /// The exact maximum count over eligible sequences.
    pub fn upsilon_star(&self) -> u32 {
        self.upsilon_star
    }

    /// Maximum minus minimum.
    pub fn discrepancy(&self) -> u32 {
        self.upsilon_star - self.upsilon
    }

    /// True when minimum and maximum coincide.
    pub fn is_stable(&self) -> bool {
        self.discrepancy() == 0
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    MinDegree,
    MaxDegree,
}

/// Eligible vertices of the current underlying graph under `objective`:
/// non-universal vertices whose degree is extreme among non-universal ones.
fn eligible_candidates(underlying: &SimpleGraph, objective: Objective) -> Vec<VertexId> {
    let universal = underlying.vertex_count() - 1;
    let profile = underlying.degree_profile();
    let non_universal: Vec<(VertexId, u32)> =
        profile.iter().filter(|&(_, d)| d < universal).collect();
    let Some(target) = non_universal
        .iter()
        .map(|&(_, d)| d)
        .reduce(|a, b| match objective {
            Objective::MinDegree => a.min(b),
            Objective::MaxDegree => a.max(b),
        })
    else {
        return Vec::new();
    };
    non_universal
        .into_iter()
        .filter(|&(_, d)| d == target)
        .map(|(v, _)| v)
        .collect()
}

fn run_adaptive(
    g: &SimpleGraph,
    objective: Objective,
    policy: &TieBreakPolicy,
) -> Result<ExplosionTrace, EngineError> {
    let mut state = MixedState::new(g.clone());
    let mut sequence = Vec::new();
    let mut explicit_used = 0usize;
    loop {
        let candidates = eligible_candidates(&state.underlying(), objective);
        if candidates.is_empty() {
            break; // every vertex universal: complete
        }
        let pick = match policy {
            TieBreakPolicy::LowestIndex => candidates[0],
            TieBreakPolicy::HighestIndex => *candidates.last().expect("non-empty"),
            TieBreakPolicy::ExplicitSequence(listed) if explicit_used < listed.len() => {
                let v = listed[explicit_used];
                explicit_used += 1;
                if !candidates.contains(&v) {
                    return Err(EngineError::PolicyViolation {
                        step: sequence.len() + 1,
                        vertex: v,
                    });
                }
                v
            }
            TieBreakPolicy::ExplicitSequence(_) => candidates[0],
            TieBreakPolicy::ExhaustiveBest => unreachable!("handled by subset search"),
        };
        state = state.explode(pick).expect("candidate is in range");
        sequence.push(pick);
    }
    Ok(ExplosionTrace::record(g.clone(), &sequence).expect("sequence is in range"))
}

/// Bitset view of a graph for subset searches. `exploded` masks always hold
/// vertices already made universal; everything else reads degrees from
/// `adj[v] | exploded`.
struct BitView {
    n: u32,
    adj: Vec<u64>,
}

impl BitView {
    fn new(g: &SimpleGraph, limit: u32) -> Result<Self, EngineError> {
        let n = g.vertex_count();
        let limit = limit.min(64);
        if n > limit {
            return Err(EngineError::SolverLimitExceeded { n, limit });
        }
        Ok(BitView {
            n,
            adj: g.adjacency_masks(),
        })
    }

    fn degree_after(&self, v: usize, exploded: u64) -> u32 {
        ((self.adj[v] | exploded) & !(1u64 << v)).count_ones()
    }

    /// Mask of eligible vertices (non-universal with extreme degree).
    fn candidate_mask(&self, exploded: u64, objective: Objective) -> u64 {
        let universal = self.n - 1;
        let mut target = None;
        let mut mask = 0u64;
        for v in 0..self.n as usize {
            if exploded >> v & 1 == 1 {
                continue;
            }
            let d = self.degree_after(v, exploded);
            if d >= universal {
                continue;
            }
            let better = match (target, objective) {
                (None, _) => true,
                (Some(t), Objective::MinDegree) => d < t,
                (Some(t), Objective::MaxDegree) => d > t,
            };
            if better {
                target = Some(d);
                mask = 1u64 << v;
            } else if target == Some(d) {
                mask |= 1u64 << v;
            }
        }
        mask
    }

    /// Mask of all vertices still below universal degree.
    fn non_universal_mask(&self, exploded: u64) -> u64 {
        let universal = self.n - 1;
        let mut mask = 0u64;
        for v in 0..self.n as usize {
            if exploded >> v & 1 == 0 && self.degree_after(v, exploded) < universal {
                mask |= 1u64 << v;
            }
        }
        mask
    }
}

/// Shortest and longest run lengths over all degree-respecting choices,
/// memoized on the exploded set (the underlying graph depends only on it).
fn respecting_extremes(view: &BitView, objective: Objective, memo: &mut HashMap<u64, (u32, u32)>, exploded: u64) -> (u32, u32) {
    if let Some(&cached) = memo.get(&exploded) {
        return cached;
    }
    let mut cands = view.candidate_mask(exploded, objective);
    let result = if cands == 0 {
        (0, 0)
    } else {
        let mut shortest = u32::MAX;
        let mut longest = 0;
        while cands != 0 {
            let v = cands.trailing_zeros();
            cands &= cands - 1;
            let (lo, hi) = respecting_extremes(view, objective, memo, exploded | 1u64 << v);
            shortest = shortest.min(1 + lo);
            longest = longest.max(1 + hi);
        }
        (shortest, longest)
    };
    memo.insert(exploded, result);
    result
}

/// Reconstructs the lexicographically smallest respecting run achieving the
/// shortest (or longest) length.
fn respecting_extreme_sequence(view: &BitView, objective: Objective, want_longest: bool) -> Vec<VertexId> {
    let mut memo = HashMap::new();
    let mut exploded = 0u64;
    let mut sequence = Vec::new();
    loop {
        let (lo, hi) = respecting_extremes(view, objective, &mut memo, exploded);
        let remaining = if want_longest { hi } else { lo };
        if remaining == 0 {
            break;
        }
        let mut cands = view.candidate_mask(exploded, objective);
        while cands != 0 {
            let v = cands.trailing_zeros();
            cands &= cands - 1;
            let (lo, hi) = respecting_extremes(view, objective, &mut memo, exploded | 1u64 << v);
            let after = if want_longest { hi } else { lo };
            if 1 + after == remaining {
                sequence.push(VertexId::new(v + 1));
                exploded |= 1u64 << v;
                break;
            }
        }
    }
    sequence
}

/// Runs the explosion recursion: each step explodes a minimum-degree
/// non-universal vertex of the current underlying graph, chosen by `policy`,
/// until the graph is complete.
///
/// With [`TieBreakPolicy::ExhaustiveBest`] this is a bounded search over all
/// minimum-degree-respecting runs (vertex cap [`DEFAULT_SEQUENCE_LIMIT`])
/// returning a shortest one.
pub fn greedy_mcpherson(
    g: &SimpleGraph,
    policy: &TieBreakPolicy,
) -> Result<ExplosionTrace, EngineError> {
    match policy {
        TieBreakPolicy::ExhaustiveBest => {
            let view = BitView::new(g, DEFAULT_SEQUENCE_LIMIT)?;
            let sequence = respecting_extreme_sequence(&view, Objective::MinDegree, false);
            Ok(ExplosionTrace::record(g.clone(), &sequence).expect("sequence in range"))
        }
        _ => run_adaptive(g, Objective::MinDegree, policy),
    }
}

/// Runs the inverse recursion: each step explodes a maximum-degree vertex
/// among those of degree at most `n - 2`, chosen by `policy`, until the graph
/// is complete.
///
/// With [`TieBreakPolicy::ExhaustiveBest`] this is a bounded search over all
/// maximum-degree-respecting runs returning a longest one.
pub fn inverse_mcpherson(
    g: &SimpleGraph,
    policy: &TieBreakPolicy,
) -> Result<ExplosionTrace, EngineError> {
    match policy {
        TieBreakPolicy::ExhaustiveBest => {
            let view = BitView::new(g, DEFAULT_SEQUENCE_LIMIT)?;
            let sequence = respecting_extreme_sequence(&view, Objective::MaxDegree, true);
            Ok(ExplosionTrace::record(g.clone(), &sequence).expect("sequence in range"))
        }
        _ => run_adaptive(g, Objective::MaxDegree, policy),
    }
}

/// Exact minimum explosion count with the default solver limit.
pub fn exact_upsilon(g: &SimpleGraph) -> Result<UpsilonCertificate, EngineError> {
    exact_upsilon_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Exact minimum explosion count for graphs of at most `limit` vertices
/// (clamped to 64, the bitset width).
///
/// Computed as `n` minus the clique number; the witness is the complement of
/// a maximum clique, replayed in ascending order for the trace.
pub fn exact_upsilon_with_limit(
    g: &SimpleGraph,
    limit: u32,
) -> Result<UpsilonCertificate, EngineError> {
    let view = BitView::new(g, limit)?;
    let n = view.n;
    let clique_mask = clique::maximum_clique(&view.adj);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let witness_mask = all & !clique_mask;

    let mut witness = Vec::new();
    let mut m = witness_mask;
    while m != 0 {
        let v = m.trailing_zeros();
        m &= m - 1;
        witness.push(VertexId::new(v + 1));
    }
    let trace = ExplosionTrace::record(g.clone(), &witness).expect("witness in range");
    debug_assert!(trace.final_complete());
    Ok(UpsilonCertificate {
        value: n - clique_mask.count_ones(),
        witness_set: witness.into_iter().collect(),
        trace,
    })
}

/// Exact maximum explosion count with the default sequence limit.
pub fn exact_upsilon_star(g: &SimpleGraph) -> Result<(u32, ExplosionTrace), EngineError> {
    exact_upsilon_star_with_limit(g, DEFAULT_SEQUENCE_LIMIT)
}

/// Exact maximum length over all explosion sequences in which every exploded
/// vertex has degree at most `n - 2` at its turn. Depth-first search over
/// exploded sets, memoized; refuses graphs above `limit` vertices.
pub fn exact_upsilon_star_with_limit(
    g: &SimpleGraph,
    limit: u32,
) -> Result<(u32, ExplosionTrace), EngineError> {
    let view = BitView::new(g, limit)?;

    fn longest(view: &BitView, memo: &mut HashMap<u64, u32>, exploded: u64) -> u32 {
        if let Some(&cached) = memo.get(&exploded) {
            return cached;
        }
        let mut eligible = view.non_universal_mask(exploded);
        let mut best = 0;
        while eligible != 0 {
            let v = eligible.trailing_zeros();
            eligible &= eligible - 1;
            best = best.max(1 + longest(view, memo, exploded | 1u64 << v));
        }
        memo.insert(exploded, best);
        best
    }

    let mut memo = HashMap::new();
    let value = longest(&view, &mut memo, 0);

    let mut exploded = 0u64;
    let mut sequence = Vec::new();
    let mut remaining = value;
    while remaining > 0 {
        let mut eligible = view.non_universal_mask(exploded);
        while eligible != 0 {
            let v = eligible.trailing_zeros();
            eligible &= eligible - 1;
            if 1 + longest(&view, &mut memo, exploded | 1u64 << v) == remaining {
                sequence.push(VertexId::new(v + 1));
                exploded |= 1u64 << v;
                remaining -= 1;
                break;
            }
        }
    }
    let trace = ExplosionTrace::record(g.clone(), &sequence).expect("sequence in range");
    debug_assert!(trace.final_complete());
    Ok((value, trace))
}

/// The edge-deficit bound: explosion count never exceeds the number of
/// missing edges.
pub fn upsilon_upper_bound(g: &SimpleGraph) -> u32 {
    (complete_edge_count(g.vertex_count()) - g.edge_count()) as u32
}

/// Minimum, maximum, discrepancy, and stability of one graph, with the
/// default solver limits.
pub fn stability_report(g: &SimpleGraph) -> Result<StabilityReport, EngineError> {
    stability_report_with_limits(g, DEFAULT_EXACT_LIMIT, DEFAULT_SEQUENCE_LIMIT)
}

/// [`stability_report`] with explicit caps for the two solvers.
pub fn stability_report_with_limits(
    g: &SimpleGraph,
    exact_limit: u32,
    sequence_limit: u32,
) -> Result<StabilityReport, EngineError> {
    let upsilon = exact_upsilon_with_limit(g, exact_limit)?.value();
    let (upsilon_star, _) = exact_upsilon_star_with_limit(g, sequence_limit)?;
    debug_assert!(upsilon_star >= upsilon);
    Ok(StabilityReport {
        upsilon,
        upsilon_star,
    })
}

fn factorial(k: usize) -> usize {
    (1..=k).product::<usize>().max(1)
}

fn nth_permutation(items: &[VertexId], mut rank: usize) -> Vec<VertexId> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    for i in (1..=pool.len()).rev() {
        let f = factorial(i - 1);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// Checks that every ordering of `set` yields the same underlying graph.
///
/// All `|set|!` orderings are replayed when that count is at most `trials`;
/// otherwise `trials` orderings evenly spaced through lexicographic rank are
/// sampled (deterministically). Requires `|set| <= 8` and vertices in range.
pub fn order_invariance_check(g: &SimpleGraph, set: &[VertexId], trials: usize) -> bool {
    let vertices: Vec<VertexId> = set.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    assert!(vertices.len() <= 8, "order invariance check is capped at 8 vertices");
    assert!(vertices.iter().all(|&v| g.contains(v)), "set must be within the graph");
    if vertices.len() <= 1 {
        return true;
    }

    let replay = |order: &[VertexId]| {
        let mut state = MixedState::new(g.clone());
        for &v in order {
            state = state.explode(v).expect("vertex in range");
        }
        state.underlying()
    };

    let reference = replay(&vertices);
    let total = factorial(vertices.len());
    let ranks: Vec<usize> = if total <= trials.max(1) {
        (0..total).collect()
    } else {
        (0..trials).map(|i| i * total / trials).collect()
    };
    ranks
        .into_iter()
        .all(|r| replay(&nth_permutation(&vertices, r)) == reference)
}

/// Greedy-versus-exact comparison for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapAnalysis {
    /// The exact minimum.
    pub exact: u32,
    /// Trace length per requested policy; `None` records a policy violation.
    pub policy_lengths: Vec<Option<u32>>,
    /// Shortest length over all minimum-degree-respecting runs.
    pub best_respecting: u32,
    /// Longest length over all minimum-degree-respecting runs.
    pub worst_respecting: u32,
}

impl GapAnalysis {
    /// Some minimum-degree choice leads to a run longer than the exact value.
    pub fn policy_sensitive(&self) -> bool {
        self.worst_respecting > self.exact
    }

    /// No minimum-degree-respecting run attains the exact value.
    pub fn hard_counterexample(&self) -> bool {
        self.best_respecting > self.exact
    }
}

/// One scanned instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRow {
    /// Position in the input sequence.
    pub index: usize,
    pub vertex_count: u32,
    pub edge_count: usize,
    /// The analysis, or the error that prevented it.
    pub analysis: Result<GapAnalysis, EngineError>,
}

/// Scan result over a sequence of instances, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    /// The policies each instance was run under, in column order.
    pub policies: Vec<TieBreakPolicy>,
    pub rows: Vec<GapRow>,
}

impl GapReport {
    /// Number of instances where some minimum-degree choice is suboptimal.
    pub fn policy_sensitive_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.analysis.as_ref().is_ok_and(|a| a.policy_sensitive()))
            .count()
    }

    /// Number of instances no minimum-degree-respecting run solves optimally.
    pub fn hard_counterexample_count(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.analysis.as_ref().is_ok_and(|a| a.hard_counterexample()))
            .count()
    }
}

/// Runs every instance against every policy and against the exhaustive
/// respecting-run extremes, flagging policy-sensitive instances and hard
/// counterexamples. Failures are recorded per instance, never raised.
pub fn greedy_gap_scan(instances: &[SimpleGraph], policies: &[TieBreakPolicy]) -> GapReport {
    let rows = instances
        .iter()
        .enumerate()
        .map(|(index, g)| GapRow {
            index,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            analysis: analyze_instance(g, policies),
        })
        .collect();
    GapReport {
        policies: policies.to_vec(),
        rows,
    }
}

fn analyze_instance(
    g: &SimpleGraph,
    policies: &[TieBreakPolicy],
) -> Result<GapAnalysis, EngineError> {
    let exact = exact_upsilon(g)?.value();
    let view = BitView::new(g, DEFAULT_SEQUENCE_LIMIT)?;
    let mut memo = HashMap::new();
    let (best_respecting, worst_respecting) =
        respecting_extremes(&view, Objective::MinDegree, &mut memo, 0);
    let policy_lengths = policies
        .iter()
        .map(|policy| match greedy_mcpherson(g, policy) {
            Ok(trace) => Ok(Some(trace.len() as u32)),
            Err(EngineError::PolicyViolation { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert!(best_respecting >= exact);
    Ok(GapAnalysis {
        exact,
        policy_lengths,
        best_respecting,
        worst_respecting,
    })
}
