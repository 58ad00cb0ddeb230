//! Small undirected simple graphs stored as per-vertex neighbor bitsets.

use core::fmt;

use crate::error::GraphError;

/// Largest supported vertex count. Adjacency rows fit in a `u16`.
pub const MAX_ORDER: usize = 12;

/// A subset of `{0, .., MAX_ORDER - 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{0, .., n - 1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 16 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n - 1}`.
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Undirected simple graph on `1..=MAX_ORDER` labeled vertices.
///
/// Graphs are plain values: every operation that "changes" a graph returns a
/// new one.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    adj: [u16; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange { order: n });
        }
        Ok(Graph { order: n as u8, adj: [0; MAX_ORDER] })
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints and repeated pairs, naming the offending pair.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, order: n });
            }
            if u == v {
                return Err(GraphError::Loop { v });
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(n: usize, rows: &[u16]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        if rows.len() != n {
            return Err(GraphError::OrderOutOfRange { order: rows.len() });
        }
        let range = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !range != 0 {
                let u = (row & !range).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { u: v, v: u, order: n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop { v });
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet::from_bits(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).bits() & !(1 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderOutOfRange { order: n });
        }
        let mut g = Graph::path(n)?;
        g.set_edge(n - 1, 0);
        Ok(g)
    }

    /// `K_{a,b}` with parts `{0..a}` and `{a..a+b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub const fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u16] {
        &self.adj[..self.order()]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| VertexSet(self.adj[u] & !((2u16 << u) - 1)).iter().map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order()).map(move |v| self.degree(v))
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of `self` with the edge `uv` added. Panics on a loop or an
    /// out-of-range endpoint.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.order() && v < self.order(), "bad edge {u}{v}");
        let mut g = *self;
        g.set_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        g.clear_edge(u, v);
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of
    /// `0..order`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut g = Graph { order: self.order, adj: [0; MAX_ORDER] };
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Removes `v` and shifts higher labels down by one. Returns `None` for
    /// a single-vertex graph.
    pub fn delete_vertex(&self, v: usize) -> Option<Graph> {
        let n = self.order();
        if n <= 1 {
            return None;
        }
        let low = (1u16 << v) - 1;
        let mut g = Graph { order: self.order - 1, adj: [0; MAX_ORDER] };
        for u in (0..n).filter(|&u| u != v) {
            let row = self.adj[u];
            let squeezed = (row & low) | ((row >> 1) & !low);
            g.adj[if u < v { u } else { u - 1 }] = squeezed;
        }
        Some(g)
    }

    /// Merges `v` into `u` (which must be distinct) and deletes `v`.
    pub fn contract(&self, u: usize, v: usize) -> Graph {
        debug_assert!(u != v);
        let mut g = *self;
        let merged = (g.adj[u] | g.adj[v]) & !(1 << u) & !(1 << v);
        for w in VertexSet(g.adj[v]) {
            g.clear_edge(v, w);
        }
        for w in VertexSet(merged) {
            g.set_edge(u, w);
        }
        g.delete_vertex(v).expect("contraction needs two vertices")
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let mut unseen = self.vertices();
        core::iter::from_fn(move || {
            let start = unseen.first()?;
            let comp = self.reach(start);
            unseen = unseen.difference(comp);
            Some(comp)
        })
    }

    pub fn component_count(&self) -> usize {
        self.components().count()
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == self.vertices()
    }

    fn reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// `m - n + c`: the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.size() + self.component_count() - self.order()
    }

    pub fn min_degree(&self) -> usize {
        self.degree_sequence().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degree_sequence().max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * (n - 1) / 2
    }

    /// Shortest-path eccentricity maximum, or [`Diameter::Infinite`] when the
    /// graph is disconnected.
    pub fn diameter(&self) -> Diameter {
        let n = self.order();
        let mut worst = 0;
        for s in 0..n {
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut depth = 0;
            while seen.len() < n {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.difference(seen);
                if frontier.is_empty() {
                    return Diameter::Infinite;
                }
                seen = seen.union(frontier);
                depth += 1;
            }
            worst = worst.max(depth);
        }
        Diameter::Finite(worst)
    }

    pub fn dominates(&self, set: VertexSet) -> bool {
        let covered = set.iter().fold(set, |acc, v| acc.union(self.neighbors(v)));
        covered == self.vertices()
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.neighbors(v).intersection(set).is_empty())
    }

    /// Minimum dominating set, found by trying subsets in increasing size.
    /// Among sets of minimum size the one with smallest bitmask is returned.
    pub fn domination_number(&self) -> (usize, VertexSet) {
        let n = self.order();
        for k in 1..=n {
            if let Some(s) = subsets_of_size(n, k).find(|&s| self.dominates(s)) {
                return (k, s);
            }
        }
        unreachable!("the full vertex set dominates")
    }

    /// Maximum independent set by exhaustive search.
    pub fn independence_number(&self) -> (usize, VertexSet) {
        let n = self.order();
        for k in (1..=n).rev() {
            if let Some(s) = subsets_of_size(n, k).find(|&s| self.is_independent(s)) {
                return (k, s);
            }
        }
        unreachable!("a single vertex is independent")
    }

    /// Whether some (not necessarily induced) 4-cycle exists: two distinct
    /// vertices with at least two common neighbors.
    pub fn has_4cycle(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| (u + 1..n).any(|v| self.neighbors(u).intersection(self.neighbors(v)).len() >= 2))
    }

    /// Whether every edge lies on some Hamiltonian cycle. Vacuously true for
    /// edgeless graphs; false whenever an edge exists and `n < 3`.
    pub fn every_edge_on_hamiltonian_cycle(&self) -> bool {
        self.edges().all(|(u, v)| self.hamiltonian_cycle_through(u, v))
    }

    /// Whether a Hamiltonian cycle uses the edge `uv`.
    pub fn hamiltonian_cycle_through(&self, u: usize, v: usize) -> bool {
        if self.order() < 3 || !self.has_edge(u, v) {
            return false;
        }
        // A Hamiltonian u..v path that avoids the edge uv closes into the cycle.
        let g = self.without_edge(u, v);
        g.hamiltonian_path_from(u, v, VertexSet::singleton(u))
    }

    fn hamiltonian_path_from(&self, at: usize, target: usize, visited: VertexSet) -> bool {
        if visited.len() == self.order() {
            return at == target;
        }
        let open = self.neighbors(at).difference(visited);
        open.iter().any(|w| {
            // Reaching the target early can never complete the path.
            (w != target || visited.len() + 1 == self.order())
                && self.hamiltonian_path_from(w, target, visited.union(VertexSet::singleton(w)))
        })
    }

    /// Whether `self` contains `h` as a spanning subgraph: same order and a
    /// bijection mapping every edge of `h` onto an edge of `self`.
    pub fn contains_spanning_subgraph(&self, h: &Graph) -> bool {
        let n = self.order();
        if n != h.order() || h.size() > self.size() {
            return false;
        }
        let mut gd: [usize; MAX_ORDER] = [0; MAX_ORDER];
        let mut hd: [usize; MAX_ORDER] = [0; MAX_ORDER];
        for v in 0..n {
            gd[v] = self.degree(v);
            hd[v] = h.degree(v);
        }
        gd[..n].sort_unstable_by(|a, b| b.cmp(a));
        hd[..n].sort_unstable_by(|a, b| b.cmp(a));
        if gd[..n].iter().zip(&hd[..n]).any(|(a, b)| a < b) {
            return false;
        }
        // Map h's vertices in an order that keeps each new vertex attached to
        // already-mapped ones where possible, highest degree first.
        let mut order = [0usize; MAX_ORDER];
        let mut placed = VertexSet::EMPTY;
        for slot in order.iter_mut().take(n) {
            let pick = (0..n)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| (h.neighbors(v).intersection(placed).len(), h.degree(v), n - v))
                .expect("unplaced vertex remains");
            *slot = pick;
            placed.insert(pick);
        }
        let mut image = [usize::MAX; MAX_ORDER];
        self.extend_embedding(h, &order[..n], 0, &mut image, VertexSet::EMPTY)
    }

    fn extend_embedding(
        &self,
        h: &Graph,
        order: &[usize],
        depth: usize,
        image: &mut [usize; MAX_ORDER],
        used: VertexSet,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        let mut required = self.vertices().difference(used);
        for hu in h.neighbors(hv) {
            if image[hu] != usize::MAX {
                required = required.intersection(self.neighbors(image[hu]));
            }
        }
        for gv in required {
            if self.degree(gv) < h.degree(hv) {
                continue;
            }
            image[hv] = gv;
            if self.extend_embedding(h, order, depth + 1, image, used.union(VertexSet::singleton(gv))) {
                return true;
            }
        }
        image[hv] = usize::MAX;
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}

/// Graph diameter; disconnected graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

/// All `k`-subsets of `{0..n}` in increasing bitmask order (Gosper's hack).
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = 1u32 << n;
    let mut next = if k == 0 {
        0
    } else if k > n {
        limit
    } else {
        (1u32 << k) - 1
    };
    let mut done = false;
    core::iter::from_fn(move || {
        if done || next >= limit {
            return None;
        }
        let cur = next;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            next = (((r ^ cur) >> 2) / c) | r;
        }
        Some(VertexSet(cur as u16))
    })
}
