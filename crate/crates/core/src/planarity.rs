//! Planarity by Kuratowski-minor search, and triangulation generation by
//! diagonal flips on rotation systems.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::canon::{canonical_code, canonical_form, CanonicalCode};
use crate::decide::star_augment;
use crate::error::DecideError;
use crate::graph::{Graph, VertexSet};

/// Whether `g` has neither a `K5` nor a `K3,3` minor.
pub fn is_planar(g: &Graph) -> bool {
    let mut memo = BTreeMap::new();
    !has_kuratowski_minor(g, &mut memo)
}

/// Whether `g` plus a universal vertex is planar. Needs `order <= 11`.
pub fn is_outerplanar(g: &Graph) -> Result<bool, DecideError> {
    let n = g.order();
    // Star augmentation turns m <= 3(n+1) - 6 into m <= 2n - 3.
    if n >= 2 && g.size() > 2 * n - 3 {
        return Ok(false);
    }
    Ok(is_planar(&star_augment(g)?))
}

/// Deletes vertices of degree at most 1 and suppresses degree-2 vertices
/// (smoothing, or plain deletion when the two neighbors are already
/// adjacent). Both preserve planarity in either direction.
fn reduce(g: &Graph) -> Graph {
    let mut g = *g;
    loop {
        if g.order() <= 4 {
            return g;
        }
        let Some(v) = (0..g.order()).find(|&v| g.degree(v) <= 2) else {
            return g;
        };
        let nb: Vec<usize> = g.neighbors(v).iter().collect();
        if nb.len() == 2 && !g.has_edge(nb[0], nb[1]) {
            g = g.contract(nb[0], v);
        } else {
            g = g.delete_vertex(v).expect("order above 4");
        }
    }
}

fn is_k33(g: &Graph) -> bool {
    if g.order() != 6 || g.size() != 9 || (0..6).any(|v| g.degree(v) != 3) {
        return false;
    }
    // A 3-regular bipartite graph on six vertices is K3,3.
    let side = g.neighbors(0);
    side.iter().all(|v| g.neighbors(v).intersection(side).is_empty())
        && side.complement(6).iter().all(|v| g.neighbors(v).difference(side).is_empty())
}

fn has_kuratowski_minor(g: &Graph, memo: &mut BTreeMap<CanonicalCode, bool>) -> bool {
    let g = reduce(g);
    let (n, m) = (g.order(), g.size());
    if n <= 4 {
        return false;
    }
    if m > 3 * n - 6 {
        return true;
    }
    // Minors never raise the cycle rank; K3,3 has rank 4 and K5 rank 6.
    if g.cycle_rank() < 4 {
        return false;
    }
    if n == 5 {
        return false;
    }
    if is_k33(&g) {
        return true;
    }
    let key = canonical_code(&g);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let edges: Vec<_> = g.edges().collect();
    let hit = edges.iter().any(|&(u, v)| {
        has_kuratowski_minor(&g.without_edge(u, v), memo) || has_kuratowski_minor(&g.contract(u, v), memo)
    });
    memo.insert(key, hit);
    hit
}

/// A combinatorial embedding: the cyclic order of neighbors around every
/// vertex. Faces are traced by `u -> v` followed by `v -> succ_v(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<u8>>,
}

/// A flip was refused because it would create a parallel edge or the edge
/// does not separate two distinct triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipRejected {
    pub u: usize,
    pub v: usize,
}

impl RotationSystem {
    /// The triangle `0 1 2` with its two faces.
    pub fn triangle() -> Self {
        RotationSystem { rotation: alloc::vec![alloc::vec![1, 2], alloc::vec![2, 0], alloc::vec![0, 1]] }
    }

    /// Stacked triangulation on `n >= 3` vertices: each new vertex goes into
    /// the face to the left of the dart `0 -> 1`.
    pub fn stacked(n: usize) -> Self {
        let mut r = RotationSystem::triangle();
        while r.order() < n {
            r = r.insert_vertex(0, 1);
        }
        r
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    pub fn rotation(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(|&w| w as usize)
    }

    /// Neighbor following `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&w| w as usize == u).expect("u is a neighbor of v");
        rot[(i + 1) % rot.len()] as usize
    }

    pub fn graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("embedding order within capacity");
        for v in 0..n {
            for w in self.rotation(v) {
                g.set_edge(v, w);
            }
        }
        g
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Faces as dart cycles, each listed from its least dart.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = BTreeMap::new();
        let mut faces = Vec::new();
        for u in 0..n {
            for v in self.rotation(u) {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b), ()).is_none() {
                    face.push(a);
                    let c = self.succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// `V - E + F` (2 for a connected spherical embedding).
    pub fn euler_characteristic(&self) -> isize {
        self.order() as isize - self.edge_count() as isize + self.faces().len() as isize
    }

    /// Whether the rotation lists describe a simple graph where every edge is
    /// listed at both endpoints and every face is a triangle.
    pub fn is_triangulation(&self) -> bool {
        let n = self.order();
        for v in 0..n {
            let rot = &self.rotation[v];
            let set = VertexSet::from_vertices(self.rotation(v));
            if set.len() != rot.len() || set.contains(v) {
                return false;
            }
            if set.iter().any(|w| w >= n || !self.rotation[w].contains(&(v as u8))) {
                return false;
            }
        }
        self.faces().iter().all(|f| f.len() == 3) && self.euler_characteristic() == 2
    }

    /// Inserts a new vertex into the face left of `a -> b`, which must be a
    /// triangle `a b c`.
    pub fn insert_vertex(&self, a: usize, b: usize) -> Self {
        let c = self.succ(b, a);
        let w = self.order() as u8;
        let mut r = self.clone();
        r.insert_after(a, c, w);
        r.insert_after(b, a, w);
        r.insert_after(c, b, w);
        r.rotation.push(alloc::vec![a as u8, c as u8, b as u8]);
        r
    }

    fn insert_after(&mut self, v: usize, after: usize, new: u8) {
        let rot = &mut self.rotation[v];
        let i = rot.iter().position(|&w| w as usize == after).expect("anchor is a neighbor");
        rot.insert(i + 1, new);
    }

    fn remove_neighbor(&mut self, v: usize, u: usize) {
        self.rotation[v].retain(|&w| w as usize != u);
    }

    /// Replaces edge `uv` by the other diagonal `xy` of the quadrilateral
    /// formed by its two incident triangles.
    pub fn flip(&self, u: usize, v: usize) -> Result<Self, FlipRejected> {
        let reject = FlipRejected { u, v };
        if u == v || !self.rotation[u].contains(&(v as u8)) {
            return Err(reject);
        }
        let x = self.succ(v, u);
        let y = self.succ(u, v);
        if x == y || self.rotation[x].contains(&(y as u8)) {
            return Err(reject);
        }
        // Both sides must be triangles for the quadrilateral to exist.
        if self.succ(x, v) != u || self.succ(y, u) != v {
            return Err(reject);
        }
        let mut r = self.clone();
        r.remove_neighbor(u, v);
        r.remove_neighbor(v, u);
        r.insert_after(x, v, y as u8);
        r.insert_after(y, u, x as u8);
        Ok(r)
    }
}

/// Every simple triangulation on `n` vertices, one per isomorphism class,
/// sorted by canonical code.
pub fn generate_triangulations(n: usize) -> Result<Vec<Graph>, DecideError> {
    check_triangulation_order(n)?;
    Ok(sorted_graphs(flip_closure(alloc::vec![RotationSystem::stacked(n)])))
}

/// Independent route: insert a degree-3 vertex into every face of every
/// triangulation on `n - 1` vertices, then close under flips.
pub fn generate_triangulations_by_insertion(n: usize) -> Result<Vec<Graph>, DecideError> {
    check_triangulation_order(n)?;
    let mut level: Vec<RotationSystem> = alloc::vec![RotationSystem::stacked(4)];
    for k in 5..=n {
        let seeds: Vec<RotationSystem> =
            level.iter().flat_map(|r| r.faces().into_iter().map(move |f| r.insert_vertex(f[0], f[1]))).collect();
        level = flip_closure(seeds).into_values().collect();
        debug_assert!(level.iter().all(|r| r.order() == k));
    }
    Ok(sorted_graphs(level.into_iter().map(|r| (canonical_code(&r.graph()), r)).collect()))
}

fn check_triangulation_order(n: usize) -> Result<(), DecideError> {
    if !(4..=9).contains(&n) {
        return Err(DecideError::OrderOutOfRange { order: n, min: 4, max: 9 });
    }
    Ok(())
}

fn sorted_graphs(found: BTreeMap<CanonicalCode, RotationSystem>) -> Vec<Graph> {
    found.keys().map(CanonicalCode::decode).collect()
}

/// Breadth-first closure under diagonal flips, deduplicated by canonical
/// form of the underlying graph.
pub fn flip_closure(seeds: Vec<RotationSystem>) -> BTreeMap<CanonicalCode, RotationSystem> {
    let mut found = BTreeMap::new();
    let mut queue = VecDeque::new();
    for r in seeds {
        let code = canonical_form(&r.graph()).code;
        if let alloc::collections::btree_map::Entry::Vacant(e) = found.entry(code) {
            e.insert(r.clone());
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        for (u, v) in r.graph().edges() {
            let Ok(f) = r.flip(u, v) else { continue };
            let code = canonical_code(&f.graph());
            if let alloc::collections::btree_map::Entry::Vacant(e) = found.entry(code) {
                e.insert(f.clone());
                queue.push_back(f);
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn kuratowski_graphs() {
        assert!(!is_planar(&Graph::complete(5).unwrap()));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3).unwrap()));
        assert!(is_planar(&Graph::complete(4).unwrap()));
        assert!(is_planar(&Graph::complete(5).unwrap().without_edge(0, 1)));
        assert!(is_planar(&Graph::complete_bipartite(3, 3).unwrap().without_edge(0, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 10).unwrap()));
        assert!(!is_planar(&Graph::complete_bipartite(3, 4).unwrap()));
    }

    #[test]
    fn petersen_is_not_planar() {
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let edges: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
        let petersen = Graph::build(10, &edges).unwrap();
        // 15 edges pass the Euler bound; only the minor search catches it.
        assert!(petersen.size() <= 3 * 10 - 6);
        assert!(!is_planar(&petersen));
    }

    #[test]
    fn subdivided_k5_is_not_planar() {
        // K5 on 0..5 with edge 01 subdivided by vertex 5.
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        edges.extend([(0, 5), (5, 1)]);
        assert!(!is_planar(&Graph::build(6, &edges).unwrap()));
    }

    #[test]
    fn outerplanarity() {
        assert!(is_outerplanar(&Graph::cycle(4).unwrap()).unwrap());
        assert!(!is_outerplanar(&Graph::complete(4).unwrap()).unwrap());
        assert!(!is_outerplanar(&Graph::complete_bipartite(2, 3).unwrap()).unwrap());
        assert!(is_outerplanar(&Graph::complete(4).unwrap().without_edge(0, 1)).unwrap());
        assert!(is_outerplanar(&Graph::empty(1).unwrap()).unwrap());
        assert!(is_outerplanar(&Graph::empty(12).unwrap()).is_err());
    }

    #[test]
    fn stacked_embeddings_are_triangulations() {
        for n in 3..=9 {
            let r = RotationSystem::stacked(n);
            assert!(r.is_triangulation(), "n={n}");
            assert_eq!(r.edge_count(), 3 * n - 6);
            assert_eq!(r.faces().len(), 2 * n - 4);
        }
    }

    #[test]
    fn flips_on_k4_are_rejected() {
        let k4 = RotationSystem::stacked(4);
        for (u, v) in k4.graph().edges() {
            assert_eq!(k4.flip(u, v), Err(FlipRejected { u, v }));
        }
    }

    #[test]
    fn flip_is_an_involution() {
        let r = RotationSystem::stacked(7);
        for (u, v) in r.graph().edges() {
            if let Ok(f) = r.flip(u, v) {
                assert!(f.is_triangulation());
                let x = r.succ(v, u);
                let y = r.succ(u, v);
                let back = f.flip(x, y).unwrap();
                assert_eq!(back.graph(), r.graph());
                assert!(back.is_triangulation());
            }
        }
    }

    #[test]
    fn octahedron_flips_give_the_other_class() {
        let tri6 = generate_triangulations(6).unwrap();
        assert_eq!(tri6.len(), 2);
        let closure = flip_closure(alloc::vec![RotationSystem::stacked(6)]);
        let octa = closure.values().find(|r| r.graph().min_degree() == 4).unwrap();
        let mut flipped = 0;
        for (u, v) in octa.graph().edges() {
            let f = octa.flip(u, v).unwrap();
            assert!(f.is_triangulation());
            assert_eq!(f.graph().min_degree(), 3);
            assert!(tri6.iter().any(|t| are_isomorphic(t, &f.graph())));
            flipped += 1;
        }
        assert_eq!(flipped, 12);
    }

    #[test]
    fn triangulation_counts() {
        let counts: Vec<usize> = (4..=8).map(|n| generate_triangulations(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14]);
        assert_eq!(generate_triangulations(4).unwrap(), [Graph::complete(4).unwrap()]);
        assert!(generate_triangulations(3).is_err());
        assert!(generate_triangulations(10).is_err());
    }

    #[test]
    fn insertion_pipeline_agrees() {
        for n in 4..=8 {
            assert_eq!(generate_triangulations(n).unwrap(), generate_triangulations_by_insertion(n).unwrap());
        }
    }
}
