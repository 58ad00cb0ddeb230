//! Oriented graphs, pushing, push classes, and the clique predicates.

use alloc::vec::Vec;
use core::fmt;

use crate::error::OrientError;
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// An orientation of a simple graph: each edge carries exactly one arc.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: Graph,
    out: [u16; MAX_ORDER],
}

/// How two vertices relate to one of their common neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AgreeStatus {
    /// `w` is an out-neighbor of both or an in-neighbor of both.
    Agree,
    Disagree,
}

impl Orientation {
    /// Orients `g` by one flag per edge, in the order of [`Graph::edges`]: a
    /// set flag on `(u, v)` with `u < v` means `u -> v`.
    pub fn new(g: &Graph, dirs: &[bool]) -> Result<Self, OrientError> {
        let m = g.size();
        if dirs.len() != m {
            return Err(OrientError::AssignmentLength { expected: m, found: dirs.len() });
        }
        let mut d = Orientation { base: *g, out: [0; MAX_ORDER] };
        for ((u, v), &fwd) in g.edges().zip(dirs) {
            d.set_arc(u, v, fwd);
        }
        Ok(d)
    }

    /// Like [`Orientation::new`] with the flags packed into a mask, edge `k`
    /// at bit `k`. Bits beyond the edge count are ignored.
    pub fn from_edge_mask(g: &Graph, mask: u128) -> Self {
        let mut d = Orientation { base: *g, out: [0; MAX_ORDER] };
        for (k, (u, v)) in g.edges().enumerate() {
            d.set_arc(u, v, mask >> k & 1 == 1);
        }
        d
    }

    /// Builds an orientation from an arc list.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, OrientError> {
        let g = Graph::build(n, arcs).map_err(|e| match e {
            crate::GraphError::DuplicateEdge { u, v } => OrientError::NotOriented { u, v },
            crate::GraphError::Loop { v } => OrientError::NotOriented { u: v, v },
            crate::GraphError::VertexOutOfRange { u, v, .. } | crate::GraphError::Asymmetric { u, v } => {
                OrientError::NotOriented { u, v }
            }
            crate::GraphError::OrderOutOfRange { order } => OrientError::OrderTooLarge { order, limit: MAX_ORDER },
        })?;
        let mut d = Orientation { base: g, out: [0; MAX_ORDER] };
        for &(u, v) in arcs {
            d.out[u] |= 1 << v;
        }
        Ok(d)
    }

    /// Builds an orientation from out-neighbor rows; rejects loops,
    /// opposite arc pairs and out-of-range targets.
    pub fn from_out_rows(n: usize, rows: &[u16]) -> Result<Self, OrientError> {
        if rows.len() != n {
            return Err(OrientError::AssignmentLength { expected: n, found: rows.len() });
        }
        let mut arcs = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            for v in VertexSet::from_bits(row) {
                if v == u || v >= n || rows[v] >> u & 1 == 1 {
                    return Err(OrientError::NotOriented { u, v });
                }
                arcs.push((u, v));
            }
        }
        Orientation::from_arcs(n, &arcs)
    }

    fn set_arc(&mut self, u: usize, v: usize, fwd: bool) {
        if fwd {
            self.out[u] |= 1 << v;
            self.out[v] &= !(1 << u);
        } else {
            self.out[v] |= 1 << u;
            self.out[u] &= !(1 << v);
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.out[v])
    }

    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        self.base.neighbors(v).difference(self.out_neighbors(v))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.out_neighbors(u).iter().map(move |v| (u, v)))
    }

    /// Direction flags packed as in [`Orientation::from_edge_mask`].
    pub fn edge_mask(&self) -> u128 {
        self.base.edges().enumerate().fold(0, |acc, (k, (u, v))| acc | (self.has_arc(u, v) as u128) << k)
    }

    /// Reverses every arc with exactly one endpoint in `s`.
    pub fn push(&self, s: VertexSet) -> Orientation {
        let s = s.intersection(self.base.vertices()).bits();
        let mut d = *self;
        for v in 0..self.order() {
            let out = self.out[v];
            let inn = self.base.rows()[v] & !out;
            d.out[v] = if s >> v & 1 == 1 { (out & s) | (inn & !s) } else { (out & !s) | (inn & s) };
        }
        d
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Orientation {
        let mut d = Orientation { base: self.base.permute(perm), out: [0; MAX_ORDER] };
        for (u, v) in self.arcs() {
            d.out[perm[u]] |= 1 << perm[v];
        }
        d
    }

    /// Whether `u` and `v` agree or disagree on their common neighbor `w`.
    pub fn agree_status(&self, u: usize, v: usize, w: usize) -> Result<AgreeStatus, OrientError> {
        let common = self.base.neighbors(u).intersection(self.base.neighbors(v));
        if u == v || !common.contains(w) {
            return Err(OrientError::NotCommonNeighbor { u, v, w });
        }
        Ok(if self.has_arc(u, w) == self.has_arc(v, w) { AgreeStatus::Agree } else { AgreeStatus::Disagree })
    }

    /// Common neighbors of `u` and `v` on which they agree.
    pub fn agreeing(&self, u: usize, v: usize) -> VertexSet {
        let both_out = self.out[u] & self.out[v];
        let both_in = self.in_neighbors(u).bits() & self.in_neighbors(v).bits();
        VertexSet::from_bits(both_out | both_in)
    }

    pub fn disagreeing(&self, u: usize, v: usize) -> VertexSet {
        let common = self.base.neighbors(u).intersection(self.base.neighbors(v));
        common.difference(self.agreeing(u, v))
    }

    /// Least non-adjacent pair `(u, v)`, `u < v`, not joined by a directed
    /// 2-path, if any.
    pub fn oriented_clique_violation(&self) -> Option<(usize, usize)> {
        self.non_adjacent_pairs().find(|&(u, v)| {
            let via = (self.out[u] & self.in_neighbors(v).bits()) | (self.in_neighbors(u).bits() & self.out[v]);
            via == 0
        })
    }

    pub fn is_oriented_clique(&self) -> bool {
        self.oriented_clique_violation().is_none()
    }

    /// Least non-adjacent pair that does not both agree on some common
    /// neighbor and disagree on another, i.e. does not lie on a special
    /// 4-cycle.
    pub fn push_clique_violation(&self) -> Option<(usize, usize)> {
        self.non_adjacent_pairs().find(|&(u, v)| self.agreeing(u, v).is_empty() || self.disagreeing(u, v).is_empty())
    }

    /// Pairwise push-clique test: every two vertices are adjacent or lie on
    /// a special 4-cycle.
    pub fn is_push_clique(&self) -> bool {
        self.push_clique_violation().is_none()
    }

    fn non_adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            self.base.vertices().difference(self.base.neighbors(u)).iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// The `2^(n-1)` push sets containing vertex 0; their complements give
    /// identical orientations.
    pub fn distinct_pushes(&self) -> impl Iterator<Item = (VertexSet, Orientation)> + '_ {
        let n = self.order();
        (0u16..1 << (n - 1)).map(move |s| {
            let set = VertexSet::from_bits(s << 1 | 1);
            (set, self.push(set))
        })
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({}; ", self.order())?;
        let mut first = true;
        for (u, v) in self.arcs() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}>{v}")?;
        }
        f.write_str(")")
    }
}

/// Largest order accepted by [`is_push_clique_bruteforce`].
pub const BRUTEFORCE_MAX_ORDER: usize = 10;
/// Largest order accepted by the chromatic-number searches.
pub const CHROMATIC_MAX_ORDER: usize = 7;

/// Push-clique test straight from the definition: every orientation in the
/// push class is an oriented clique.
pub fn is_push_clique_bruteforce(d: &Orientation) -> Result<bool, OrientError> {
    if d.order() > BRUTEFORCE_MAX_ORDER {
        return Err(OrientError::OrderTooLarge { order: d.order(), limit: BRUTEFORCE_MAX_ORDER });
    }
    Ok(d.distinct_pushes().all(|(_, p)| p.is_oriented_clique()))
}

/// Whether `d2` is obtained from `d1` by pushing some vertex set: the arcs on
/// which they differ must form an edge cut. Checked by propagating a side
/// label over each component.
pub fn push_related(d1: &Orientation, d2: &Orientation) -> Result<bool, OrientError> {
    Ok(push_set_between(d1, d2)?.is_some())
}

/// A set `s` with `d1.push(s) == d2`, if one exists. The returned set never
/// contains the smallest vertex of any component.
pub fn push_set_between(d1: &Orientation, d2: &Orientation) -> Result<Option<VertexSet>, OrientError> {
    if d1.base != d2.base {
        return Err(OrientError::BaseMismatch);
    }
    let g = &d1.base;
    let mut side = VertexSet::EMPTY;
    for comp in g.components() {
        let root = comp.first().expect("components are non-empty");
        let mut seen = VertexSet::singleton(root);
        let mut stack = alloc::vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                let flipped = d1.has_arc(u, v) != d2.has_arc(u, v);
                let v_side = side.contains(u) ^ flipped;
                if seen.contains(v) {
                    if side.contains(v) != v_side {
                        return Ok(None);
                    }
                } else {
                    seen.insert(v);
                    if v_side {
                        side.insert(v);
                    }
                    stack.push(v);
                }
            }
        }
    }
    Ok(Some(side))
}

/// One orientation per push class of `g`, in a fixed order. A BFS spanning
/// forest (rooted at each component's least vertex) is oriented low-to-high;
/// the remaining `m - n + c` edges take every combination, mask bit `i`
/// setting low-to-high on the `i`-th non-forest edge in edge order.
#[derive(Clone)]
pub struct PushClassReps {
    base: Orientation,
    free: Vec<(usize, usize)>,
    next: u64,
}

impl PushClassReps {
    pub fn new(g: &Graph) -> Self {
        let forest = spanning_forest(g);
        let free: Vec<_> = g.edges().filter(|e| !forest.contains(e)).collect();
        let mut base = Orientation { base: *g, out: [0; MAX_ORDER] };
        for (u, v) in g.edges() {
            base.set_arc(u, v, false);
        }
        for &(u, v) in &forest {
            base.set_arc(u, v, true);
        }
        PushClassReps { base, free, next: 0 }
    }

    /// `log2` of the class count: the cycle rank of the graph.
    pub fn rank(&self) -> usize {
        self.free.len()
    }

    pub fn class_count(&self) -> u64 {
        1u64 << self.free.len()
    }

    /// The representative with the given mask.
    pub fn representative(&self, mask: u64) -> Orientation {
        let mut d = self.base;
        for (i, &(u, v)) in self.free.iter().enumerate() {
            d.set_arc(u, v, mask >> i & 1 == 1);
        }
        d
    }

    /// Gauge-fixed representative of the class containing `d`.
    pub fn canonical_rep(&self, d: &Orientation) -> Orientation {
        align_forest(d, &self.base)
    }
}

impl Iterator for PushClassReps {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.class_count() {
            return None;
        }
        let d = self.representative(self.next);
        self.next += 1;
        Some(d)
    }
}

/// Pushes `d` so that it agrees with `target` on every edge of the spanning
/// forest used by [`PushClassReps`].
fn align_forest(d: &Orientation, target: &Orientation) -> Orientation {
    let g = d.base();
    let mut side = VertexSet::EMPTY;
    let mut seen = VertexSet::EMPTY;
    for comp in g.components() {
        let root = comp.first().expect("non-empty");
        seen.insert(root);
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).difference(seen) {
                seen.insert(v);
                let flipped = d.has_arc(u, v) != target.has_arc(u, v);
                if side.contains(u) ^ flipped {
                    side.insert(v);
                }
                queue.push_back(v);
            }
        }
    }
    d.push(side)
}

/// BFS spanning forest, each component rooted at its least vertex, edges as
/// `(low, high)`.
fn spanning_forest(g: &Graph) -> Vec<(usize, usize)> {
    let mut forest = Vec::new();
    let mut seen = VertexSet::EMPTY;
    for comp in g.components() {
        let root = comp.first().expect("non-empty");
        seen.insert(root);
        let mut queue = alloc::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).difference(seen) {
                seen.insert(v);
                forest.push((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    forest
}

/// Representatives of all push classes of `g`.
pub fn push_class_reps(g: &Graph) -> Vec<Orientation> {
    PushClassReps::new(g).collect()
}

/// Every orientation of `g`, by edge mask.
pub fn all_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    let m = g.size();
    (0u64..1 << m).map(move |mask| Orientation::from_edge_mask(g, mask as u128))
}

/// A proper oriented coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub colors: Vec<u8>,
    pub size: usize,
}

impl ColoringCertificate {
    /// Checks both coloring rules against `d`: adjacent vertices differ, and
    /// no two color classes are joined by arcs in both directions.
    pub fn is_valid_for(&self, d: &Orientation) -> bool {
        if self.colors.len() != d.order() {
            return false;
        }
        let c = |v: usize| self.colors[v] as usize;
        if self.colors.iter().any(|&x| x as usize >= self.size) {
            return false;
        }
        let mut dir = [[false; MAX_ORDER]; MAX_ORDER];
        for (u, v) in d.arcs() {
            if c(u) == c(v) {
                return false;
            }
            dir[c(u)][c(v)] = true;
        }
        (0..self.size).all(|a| (0..self.size).all(|b| !(dir[a][b] && dir[b][a])))
    }
}

struct ColoringSearch<'a> {
    d: &'a Orientation,
    order: Vec<usize>,
    k: usize,
    colors: [u8; MAX_ORDER],
    arcs: [[u8; MAX_ORDER]; MAX_ORDER],
}

const UNCOLORED: u8 = u8::MAX;

impl ColoringSearch<'_> {
    fn run(&mut self, depth: usize, used: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for c in 0..self.k.min(used + 1) {
            if self.try_assign(v, c as u8) {
                if self.run(depth + 1, used.max(c + 1)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }

    fn try_assign(&mut self, v: usize, c: u8) -> bool {
        let nb = self.d.base().neighbors(v);
        if nb.iter().any(|w| self.colors[w] == c) {
            return false;
        }
        self.colors[v] = c;
        let mut added = VertexSet::EMPTY;
        for w in nb {
            let cw = self.colors[w];
            if cw == UNCOLORED {
                continue;
            }
            let (from, to) = if self.d.has_arc(v, w) { (c, cw) } else { (cw, c) };
            if self.arcs[to as usize][from as usize] > 0 {
                for u in added {
                    self.release(v, u);
                }
                self.colors[v] = UNCOLORED;
                return false;
            }
            self.arcs[from as usize][to as usize] += 1;
            added.insert(w);
        }
        true
    }

    fn release(&mut self, v: usize, w: usize) {
        let (c, cw) = (self.colors[v], self.colors[w]);
        let (from, to) = if self.d.has_arc(v, w) { (c, cw) } else { (cw, c) };
        self.arcs[from as usize][to as usize] -= 1;
    }

    fn unassign(&mut self, v: usize) {
        for w in self.d.base().neighbors(v) {
            if self.colors[w] != UNCOLORED {
                self.release(v, w);
            }
        }
        self.colors[v] = UNCOLORED;
    }
}

/// Exact oriented chromatic number with a witness coloring. Vertices are
/// colored by descending degree with first-fit color order; the first vertex
/// always takes color 0.
pub fn oriented_chromatic_number(d: &Orientation) -> Result<ColoringCertificate, OrientError> {
    let n = d.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(OrientError::OrderTooLarge { order: n, limit: CHROMATIC_MAX_ORDER });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(d.base().degree(v)));
    for k in 1..=n {
        let mut search = ColoringSearch {
            d,
            order: order.clone(),
            k,
            colors: [UNCOLORED; MAX_ORDER],
            arcs: [[0; MAX_ORDER]; MAX_ORDER],
        };
        if search.run(0, 0) {
            let colors = search.colors[..n].to_vec();
            return Ok(ColoringCertificate { colors, size: k });
        }
    }
    unreachable!("n distinct colors always work")
}

/// Result of the pushable chromatic number search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushableColoring {
    pub value: usize,
    /// Push set producing the orientation that attains `value`.
    pub push_set: VertexSet,
    pub coloring: ColoringCertificate,
}

/// Minimum oriented chromatic number over the push class of `d`.
pub fn pushable_chromatic_number(d: &Orientation) -> Result<PushableColoring, OrientError> {
    let n = d.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(OrientError::OrderTooLarge { order: n, limit: CHROMATIC_MAX_ORDER });
    }
    let mut best: Option<PushableColoring> = None;
    for (set, p) in d.distinct_pushes() {
        let coloring = oriented_chromatic_number(&p)?;
        if best.as_ref().is_none_or(|b| coloring.size < b.value) {
            best = Some(PushableColoring { value: coloring.size, push_set: set, coloring });
        }
    }
    Ok(best.expect("at least the empty push"))
}

/// The special 4-cycle on `a=0, b=1, c=2, d=3`: arcs `ab, bc, cd, ad`.
pub fn special_4cycle() -> Orientation {
    Orientation::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).expect("valid arc list")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dipath() -> Orientation {
        // u = 0, w = 1, v = 2: u -> w -> v
        Orientation::from_arcs(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cyclic_k3() -> Orientation {
        Orientation::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    /// Orientations as digraphs are isomorphic iff some vertex bijection maps
    /// arcs to arcs. Brute force over all permutations.
    fn digraph_isomorphic(a: &Orientation, b: &Orientation) -> bool {
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(a: &Orientation, b: &Orientation, perm: &mut Vec<usize>, k: usize) -> bool {
            if k == perm.len() {
                return a.permute(perm) == *b;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if rec(a, b, perm, k + 1) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(a, b, &mut perm, 0)
    }

    #[test]
    fn orient_checks_length() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(Orientation::new(&c4, &[true; 3]), Err(OrientError::AssignmentLength { expected: 4, found: 3 }));
        // C4 edges in order: 01, 03, 12, 23. Arcs a->b, a->d, b->c, c->d.
        let d = Orientation::new(&c4, &[true, true, true, true]).unwrap();
        assert_eq!(d, special_4cycle());
        assert_eq!(Orientation::from_edge_mask(&c4, d.edge_mask()), d);
    }

    #[test]
    fn from_out_rows_rejects_two_cycles() {
        assert_eq!(Orientation::from_out_rows(2, &[0b10, 0b01]), Err(OrientError::NotOriented { u: 0, v: 1 }));
        assert_eq!(Orientation::from_out_rows(2, &[0b01, 0]), Err(OrientError::NotOriented { u: 0, v: 0 }));
        assert_eq!(Orientation::from_out_rows(2, &[0b10, 0]).unwrap().arcs().count(), 1);
    }

    #[test]
    fn push_identities() {
        let d = special_4cycle();
        assert_eq!(d.push(VertexSet::EMPTY), d);
        assert_eq!(d.push(VertexSet::full(4)), d);
        let pushed = d.push(VertexSet::singleton(1));
        assert_ne!(pushed, d);
        assert!(digraph_isomorphic(&pushed, &d));
        // Every push of the special 4-cycle is again a special 4-cycle.
        for (_, p) in d.distinct_pushes() {
            assert!(digraph_isomorphic(&p, &d));
        }
    }

    #[test]
    fn push_related_examples() {
        let d = special_4cycle();
        for s in 0..16u16 {
            assert!(push_related(&d, &d.push(VertexSet::from_bits(s))).unwrap());
        }
        let p3 = Graph::path(3).unwrap();
        let all: Vec<_> = all_orientations(&p3).collect();
        for a in &all {
            for b in &all {
                assert!(push_related(a, b).unwrap());
            }
        }
        let other = Orientation::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!push_related(&d, &other).unwrap());
        assert_eq!(push_related(&d, &dipath()), Err(OrientError::BaseMismatch));
    }

    #[test]
    fn c4_splits_into_two_classes_of_eight() {
        let c4 = Graph::cycle(4).unwrap();
        let all: Vec<_> = all_orientations(&c4).collect();
        // Brute-force closure under all 16 push sets.
        let mut classes: Vec<Vec<Orientation>> = Vec::new();
        for d in &all {
            if classes.iter().any(|c| c.contains(d)) {
                continue;
            }
            let mut class: Vec<_> = (0..16u16).map(|s| d.push(VertexSet::from_bits(s))).collect();
            class.sort_by_key(|o| o.edge_mask());
            class.dedup();
            classes.push(class);
        }
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 8));
        let special = classes.iter().find(|c| c.contains(&special_4cycle())).unwrap();
        assert!(special.iter().all(|d| d.is_push_clique()));
        let other = classes.iter().find(|c| !c.contains(&special_4cycle())).unwrap();
        assert!(other.iter().all(|d| !d.is_push_clique()));
    }

    #[test]
    fn class_rep_counts() {
        assert_eq!(push_class_reps(&Graph::cycle(4).unwrap()).len(), 2);
        assert_eq!(push_class_reps(&Graph::path(3).unwrap()).len(), 1);
        assert_eq!(push_class_reps(&Graph::path(4).unwrap()).len(), 1);
        assert_eq!(push_class_reps(&Graph::complete(4).unwrap()).len(), 8);
        let two_triangles = Graph::build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(push_class_reps(&two_triangles).len(), 4);
    }

    #[test]
    fn canonical_rep_lands_in_the_class() {
        let g = Graph::complete(4).unwrap();
        let reps = PushClassReps::new(&g);
        for d in all_orientations(&g) {
            let r = reps.canonical_rep(&d);
            assert!(push_related(&d, &r).unwrap());
            assert_eq!(push_class_reps(&g).iter().filter(|x| **x == r).count(), 1);
        }
    }

    #[test]
    fn agree_examples() {
        let d = special_4cycle();
        assert_eq!(d.agree_status(0, 2, 3), Ok(AgreeStatus::Agree));
        assert_eq!(d.agree_status(0, 2, 1), Ok(AgreeStatus::Disagree));
        assert_eq!(dipath().agree_status(0, 2, 1), Ok(AgreeStatus::Disagree));
        assert_eq!(d.agree_status(0, 1, 2), Err(OrientError::NotCommonNeighbor { u: 0, v: 1, w: 2 }));
        assert!(d.agree_status(0, 0, 1).is_err());
    }

    #[test]
    fn clique_examples() {
        assert!(dipath().is_oriented_clique());
        assert!(cyclic_k3().is_oriented_clique());
        let sink = Orientation::from_arcs(3, &[(0, 1), (2, 1)]).unwrap();
        assert_eq!(sink.oriented_clique_violation(), Some((0, 2)));
        assert!(special_4cycle().is_push_clique());
        for d in all_orientations(&Graph::complete(4).unwrap()) {
            assert!(d.is_push_clique());
            assert!(d.is_oriented_clique());
        }
        for d in all_orientations(&Graph::path(3).unwrap()) {
            assert_eq!(d.push_clique_violation(), Some((0, 2)));
        }
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(is_push_clique_bruteforce(&special_4cycle()), Ok(true));
        assert_eq!(is_push_clique_bruteforce(&dipath()), Ok(false));
        // Pushing u leaves w as a common source of u and v.
        assert!(!dipath().push(VertexSet::singleton(0)).is_oriented_clique());
        assert_eq!(is_push_clique_bruteforce(&cyclic_k3()), Ok(true));
        let big = Orientation::from_edge_mask(&Graph::empty(11).unwrap(), 0);
        assert!(is_push_clique_bruteforce(&big).is_err());
    }

    #[test]
    fn chromatic_examples() {
        let arc = Orientation::from_arcs(2, &[(0, 1)]).unwrap();
        assert_eq!(oriented_chromatic_number(&arc).unwrap().size, 2);
        let c5 = Orientation::from_arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let cert = oriented_chromatic_number(&c5).unwrap();
        assert_eq!(cert.size, 5);
        assert!(cert.is_valid_for(&c5));
        assert_eq!(oriented_chromatic_number(&dipath()).unwrap().size, 3);
        assert_eq!(pushable_chromatic_number(&dipath()).unwrap().value, 2);
        assert_eq!(pushable_chromatic_number(&special_4cycle()).unwrap().value, 4);
        for d in all_orientations(&Graph::path(4).unwrap()) {
            let p = pushable_chromatic_number(&d).unwrap();
            assert!(p.value <= 3);
            assert!(p.coloring.is_valid_for(&d.push(p.push_set)));
        }
        let big = Orientation::from_edge_mask(&Graph::empty(8).unwrap(), 0);
        assert!(oriented_chromatic_number(&big).is_err());
    }

    #[test]
    fn certificate_validation_catches_bad_colorings() {
        let d = dipath();
        let bad = ColoringCertificate { colors: alloc::vec![0, 1, 0], size: 2 };
        assert!(!bad.is_valid_for(&d));
        let good = ColoringCertificate { colors: alloc::vec![0, 1, 2], size: 3 };
        assert!(good.is_valid_for(&d));
    }

    #[test]
    fn pushing_flips_agreement_on_every_common_neighbor() {
        for g in [Graph::complete(4).unwrap(), Graph::cycle(4).unwrap(), Graph::complete_bipartite(2, 3).unwrap()] {
            let n = g.order();
            for d in all_orientations(&g) {
                for u in 0..n {
                    let p = d.push(VertexSet::singleton(u));
                    for v in (0..n).filter(|&v| v != u) {
                        let common = g.neighbors(u).intersection(g.neighbors(v));
                        for w in common {
                            assert_ne!(d.agree_status(u, v, w).unwrap(), p.agree_status(u, v, w).unwrap());
                        }
                    }
                }
            }
        }
    }
}
