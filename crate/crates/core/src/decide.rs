//! Exhaustive deciders for underlying oriented cliques and underlying push
//! cliques, and the universal-vertex reduction between them.

use alloc::vec::Vec;

use crate::enumerate::enumerate_graphs;
use crate::error::{DecideError, GraphError};
use crate::graph::{Graph, MAX_ORDER};
use crate::orient::{Orientation, PushClassReps};

/// Most edges the plain orientation search will enumerate (`2^24` cases).
pub const ORIENTATION_EDGE_BUDGET: usize = 24;
/// Largest cycle rank the push-class search will enumerate (`2^20` classes).
pub const CLASS_RANK_BUDGET: usize = 20;
/// Largest order accepted by [`verify_star_lemma`].
pub const STAR_LEMMA_MAX_ORDER: usize = 6;

/// Outcome of an exhaustive decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub holds: bool,
    /// First successful orientation in enumeration order.
    pub witness: Option<Orientation>,
    /// Orientations or push classes actually examined.
    pub checked: u64,
    /// Non-adjacent pair that failed the common-neighbor prefilter, when the
    /// search was skipped.
    pub prefilter_pair: Option<(usize, usize)>,
}

impl Decision {
    fn rejected(pair: (usize, usize)) -> Self {
        Decision { holds: false, witness: None, checked: 0, prefilter_pair: Some(pair) }
    }
}

/// `g` plus vertex `n` adjacent to every original vertex.
pub fn star_augment(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    if n + 1 > MAX_ORDER {
        return Err(GraphError::OrderOutOfRange { order: n + 1 });
    }
    let mut h = Graph::empty(n + 1)?;
    for (u, v) in g.edges() {
        h.set_edge(u, v);
    }
    for v in 0..n {
        h.set_edge(v, n);
    }
    Ok(h)
}

/// Least non-adjacent pair with fewer than `min_common` common neighbors.
pub fn common_neighbor_deficit(g: &Graph, min_common: usize) -> Option<(usize, usize)> {
    let n = g.order();
    (0..n).find_map(|u| {
        (u + 1..n)
            .filter(|&v| !g.has_edge(u, v))
            .find(|&v| g.neighbors(u).intersection(g.neighbors(v)).len() < min_common)
            .map(|v| (u, v))
    })
}

/// Whether some orientation of `g` is an oriented clique, by trying all
/// `2^m` orientations in edge-mask order.
pub fn is_underlying_oriented_clique(g: &Graph) -> Result<Decision, DecideError> {
    let m = g.size();
    if m > ORIENTATION_EDGE_BUDGET {
        return Err(DecideError::EdgeBudget { edges: m, limit: ORIENTATION_EDGE_BUDGET });
    }
    if let Some(pair) = common_neighbor_deficit(g, 1) {
        return Ok(Decision::rejected(pair));
    }
    let mut checked = 0;
    for mask in 0u64..1 << m {
        checked += 1;
        let d = Orientation::from_edge_mask(g, mask as u128);
        if d.is_oriented_clique() {
            return Ok(Decision { holds: true, witness: Some(d), checked, prefilter_pair: None });
        }
    }
    Ok(Decision { holds: false, witness: None, checked, prefilter_pair: None })
}

/// Whether some orientation of `g` is a push clique. The property is constant
/// on push classes, so one representative per class suffices.
pub fn is_underlying_push_clique(g: &Graph) -> Result<Decision, DecideError> {
    let reps = PushClassReps::new(g);
    if reps.rank() > CLASS_RANK_BUDGET {
        return Err(DecideError::ClassBudget { cycle_rank: reps.rank(), limit: CLASS_RANK_BUDGET });
    }
    if let Some(pair) = common_neighbor_deficit(g, 2) {
        return Ok(Decision::rejected(pair));
    }
    let mut checked = 0;
    for d in reps {
        checked += 1;
        if d.is_push_clique() {
            return Ok(Decision { holds: true, witness: Some(d), checked, prefilter_pair: None });
        }
    }
    Ok(Decision { holds: false, witness: None, checked, prefilter_pair: None })
}

/// The same question over all `2^m` orientations, without gauge fixing or
/// prefilter. Used to validate [`is_underlying_push_clique`].
pub fn is_underlying_push_clique_all_orientations(g: &Graph) -> Result<bool, DecideError> {
    let m = g.size();
    if m > ORIENTATION_EDGE_BUDGET {
        return Err(DecideError::EdgeBudget { edges: m, limit: ORIENTATION_EDGE_BUDGET });
    }
    Ok((0u64..1 << m).any(|mask| Orientation::from_edge_mask(g, mask as u128).is_push_clique()))
}

/// For one graph: whether `star_augment(g)` is an underlying push clique
/// exactly when `g` is an underlying oriented clique.
pub fn star_lemma_holds(g: &Graph) -> Result<bool, DecideError> {
    let upc = is_underlying_push_clique(&star_augment(g)?)?.holds;
    let uoc = is_underlying_oriented_clique(g)?.holds;
    Ok(upc == uoc)
}

/// Per-order tally of a sweep over isomorphism classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderTally {
    pub order: usize,
    pub classes: usize,
    pub mismatches: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarLemmaReport {
    pub per_order: Vec<OrderTally>,
    pub counterexamples: Vec<Graph>,
}

impl StarLemmaReport {
    pub fn classes(&self) -> usize {
        self.per_order.iter().map(|t| t.classes).sum()
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Checks the star-augmentation equivalence on every isomorphism class of
/// order at most `n_max`.
pub fn verify_star_lemma(n_max: usize) -> Result<StarLemmaReport, DecideError> {
    if !(1..=STAR_LEMMA_MAX_ORDER).contains(&n_max) {
        return Err(DecideError::OrderOutOfRange { order: n_max, min: 1, max: STAR_LEMMA_MAX_ORDER });
    }
    let mut report = StarLemmaReport { per_order: Vec::new(), counterexamples: Vec::new() };
    for n in 1..=n_max {
        let graphs = enumerate_graphs(n)?;
        let mut tally = OrderTally { order: n, classes: graphs.len(), mismatches: 0 };
        for g in graphs {
            if !star_lemma_holds(&g)? {
                tally.mismatches += 1;
                report.counterexamples.push(g);
            }
        }
        report.per_order.push(tally);
    }
    Ok(report)
}

/// Pushes every in-neighbor of `hub` so that all arcs at `hub` point away
/// from it.
pub fn push_to_source(d: &Orientation, hub: usize) -> Orientation {
    d.push(d.in_neighbors(hub))
}

/// Extends an orientation of `g` by a new vertex `n` with an arc to every
/// original vertex. Applied to an oriented clique this yields a push clique on
/// `star_augment(g)`.
pub fn star_extend(d: &Orientation) -> Result<Orientation, GraphError> {
    let n = d.order();
    star_augment(d.base())?;
    let mut arcs: Vec<(usize, usize)> = d.arcs().collect();
    arcs.extend((0..n).map(|v| (n, v)));
    Ok(Orientation::from_arcs(n + 1, &arcs).expect("arcs of a simple graph"))
}
