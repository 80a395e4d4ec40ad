//! Exact maximum-clique search on bitset adjacency, for up to 64 vertices.
//!
//! Branch and bound with a greedy-coloring bound in the style of Tomita's
//! MCQ. Deterministic: candidates are colored and expanded in a fixed order,
//! so the returned clique depends only on the input.

/// Returns a maximum clique of the graph given by neighbor bitmasks, as a
/// vertex bitmask. `adj[i]` holds the neighbors of vertex `i` (bit `i` clear).
pub(crate) fn maximum_clique(adj: &[u64]) -> u64 {
    let n = adj.len();
    assert!(n >= 1 && n <= 64);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best_mask = 0u64;
    let mut best_size = 0u32;
    expand(adj, 0, 0, all, &mut best_mask, &mut best_size);
    best_mask
}

fn expand(adj: &[u64], clique: u64, clique_size: u32, cand: u64, best_mask: &mut u64, best_size: &mut u32) {
    if cand == 0 {
        if clique_size > *best_size {
            *best_size = clique_size;
            *best_mask = clique;
        }
        return;
    }

    // Greedy coloring of the candidate set: vertices in one class are
    // pairwise non-adjacent, so a clique takes at most one per class. The
    // class number of a vertex bounds the clique extension reachable through
    // it and the vertices ordered before it.
    let mut order: Vec<(u32, u32)> = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0u32;
    while uncolored != 0 {
        color += 1;
        let mut class = uncolored;
        while class != 0 {
            let v = class.trailing_zeros();
            class &= !(1u64 << v) & !adj[v as usize];
            uncolored &= !(1u64 << v);
            order.push((v, color));
        }
    }

    let mut cand = cand;
    for &(v, color) in order.iter().rev() {
        if clique_size + color <= *best_size {
            return;
        }
        let bit = 1u64 << v;
        expand(
            adj,
            clique | bit,
            clique_size + 1,
            cand & adj[v as usize],
            best_mask,
            best_size,
        );
        cand &= !bit;
    }
}
