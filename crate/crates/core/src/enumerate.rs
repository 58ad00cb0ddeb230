//! One graph per isomorphism class by orderly generation.
//!
//! The canonical code's first `n - 1` columns describe a canonical graph on
//! `n - 1` vertices, so every canonical `n`-vertex graph arises exactly once by
//! attaching a new last vertex to a canonical parent and keeping the result
//! only if it is canonical itself.

use alloc::vec::Vec;

use crate::canon::{is_canonical, CanonicalCode};
use crate::error::DecideError;
use crate::graph::{Graph, VertexSet};

pub const MAX_ENUMERATION_ORDER: usize = 9;

/// Canonical representatives of all simple graphs on `n` vertices, sorted by
/// ascending canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, DecideError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(DecideError::OrderOutOfRange { order: n, min: 1, max: MAX_ENUMERATION_ORDER });
    }
    let mut level = alloc::vec![Graph::empty(1)?];
    for k in 2..=n {
        level = extend_level(&level, k);
    }
    Ok(level)
}

/// All canonical children of the given canonical `(k-1)`-vertex graphs.
pub fn extend_level(parents: &[Graph], k: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = parents.iter().flat_map(|p| canonical_children(p, k)).collect();
    out.sort_by_key(CanonicalCode::of);
    out
}

/// Canonical extensions of one canonical parent by a new vertex `k - 1`.
pub fn canonical_children(parent: &Graph, k: usize) -> Vec<Graph> {
    let v = k - 1;
    let mut base = Graph::empty(k).expect("k within capacity");
    for (a, b) in parent.edges() {
        base.set_edge(a, b);
    }
    (0u16..1 << v)
        .filter_map(|mask| {
            let mut g = base;
            for u in VertexSet::from_bits(mask) {
                g.set_edge(u, v);
            }
            is_canonical(&g).then_some(g)
        })
        .collect()
}
