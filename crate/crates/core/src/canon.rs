//! Canonical labeling of small graphs.
//!
//! The code of a labeled graph lists the upper-triangle adjacency bits in
//! column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ..`, most significant
//! first. The canonical form is the relabeling whose code is numerically
//! smallest over all `n!` relabelings. Column `j` of the code depends only on
//! which vertices occupy positions `0..=j`, so the minimum is built one
//! position at a time, keeping every partial labeling whose columns so far
//! are minimal. Interchangeable twins (`N(u) - v == N(v) - u`) are explored
//! through one representative only; the swap is an automorphism fixing every
//! placed vertex, so the minimum is unaffected.

use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Totally ordered adjacency encoding. Codes of different orders compare by
/// order first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub order: u8,
    pub bits: u128,
}

impl CanonicalCode {
    /// Code of `g` under its own labeling.
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut bits = 0u128;
        for j in 1..n {
            for i in 0..j {
                bits = bits << 1 | g.has_edge(i, j) as u128;
            }
        }
        CanonicalCode { order: n as u8, bits }
    }

    /// The labeled graph this code describes.
    pub fn decode(&self) -> Graph {
        let n = self.order as usize;
        let total = n * (n - 1) / 2;
        let mut g = Graph::empty(n).expect("codes carry a valid order");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

/// A canonical labeling certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `perm[v]` is the canonical label of source vertex `v`.
    perm: [u8; MAX_ORDER],
}

impl CanonicalForm {
    pub fn perm(&self) -> Vec<usize> {
        self.perm[..self.code.order as usize].iter().map(|&p| p as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm[..self.code.order as usize].iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// The canonical representative of the source graph's class.
    pub fn graph(&self) -> Graph {
        self.code.decode()
    }
}

#[derive(Clone, Copy)]
struct Partial {
    seq: [u8; MAX_ORDER],
    placed: u16,
}

fn twin_table(g: &Graph) -> [u16; MAX_ORDER] {
    let n = g.order();
    let mut twins = [0u16; MAX_ORDER];
    for u in 0..n {
        for v in u + 1..n {
            let nu = g.neighbors(u).difference(VertexSet::singleton(v));
            let nv = g.neighbors(v).difference(VertexSet::singleton(u));
            if nu == nv {
                twins[u] |= 1 << v;
                twins[v] |= 1 << u;
            }
        }
    }
    twins
}

fn column(g: &Graph, seq: &[u8], v: usize) -> u16 {
    seq.iter().fold(0u16, |acc, &p| acc << 1 | g.has_edge(p as usize, v) as u16)
}

/// Runs the level-wise minimization. With `abort_below_identity`, stops with
/// `None` as soon as some labeling beats the identity labeling's columns.
fn minimize(g: &Graph, abort_below_identity: bool) -> Option<Partial> {
    let n = g.order();
    let twins = twin_table(g);
    let all = g.vertices().bits();
    let pruned = |v: usize, remaining: u16| twins[v] & remaining & ((1u16 << v) - 1) != 0;

    let mut states: Vec<Partial> = (0..n)
        .filter(|&v| !pruned(v, all))
        .map(|v| {
            let mut seq = [0u8; MAX_ORDER];
            seq[0] = v as u8;
            Partial { seq, placed: 1 << v }
        })
        .collect();
    let mut next = Vec::new();
    for j in 1..n {
        let mut best = u16::MAX;
        next.clear();
        for st in &states {
            let remaining = all & !st.placed;
            for v in VertexSet::from_bits(remaining) {
                if pruned(v, remaining) {
                    continue;
                }
                let col = column(g, &st.seq[..j], v);
                if col > best {
                    continue;
                }
                if col < best {
                    best = col;
                    next.clear();
                }
                let mut seq = st.seq;
                seq[j] = v as u8;
                next.push(Partial { seq, placed: st.placed | 1 << v });
            }
        }
        if abort_below_identity {
            let ident: [u8; MAX_ORDER] = core::array::from_fn(|i| i as u8);
            if best < column(g, &ident[..j], j) {
                return None;
            }
        }
        core::mem::swap(&mut states, &mut next);
    }
    // States are produced in lexicographic order of their sequences.
    states.into_iter().next()
}

/// Canonical form of `g`: the relabeling with the minimum code. Among
/// labelings attaining it, the lexicographically least vertex sequence is
/// reported, so an already-canonical graph yields the identity.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let best = minimize(g, false).expect("unrestricted search always finishes");
    let n = g.order();
    let mut perm = [0u8; MAX_ORDER];
    for (pos, &v) in best.seq[..n].iter().enumerate() {
        perm[v as usize] = pos as u8;
    }
    let perm_usize: Vec<usize> = perm[..n].iter().map(|&p| p as usize).collect();
    let code = CanonicalCode::of(&g.permute(&perm_usize));
    CanonicalForm { code, perm }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_form(g).code
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).graph()
}

/// Whether `g` is its own canonical representative.
pub fn is_canonical(g: &Graph) -> bool {
    minimize(g, true).is_some()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every permutation of `0..n`, by Heap's algorithm.
    pub(crate) fn all_perms(n: usize) -> Vec<Vec<usize>> {
        let mut a: Vec<usize> = (0..n).collect();
        let mut out = alloc::vec![a.clone()];
        let mut c = alloc::vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(a.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    fn brute_min(g: &Graph, perms: &[Vec<usize>]) -> CanonicalCode {
        perms.iter().map(|p| CanonicalCode::of(&g.permute(p))).min().unwrap()
    }

    fn labeled(n: usize, mask: u32) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    #[test]
    fn matches_permutation_sweep_up_to_five() {
        for n in 1..=5 {
            let perms = all_perms(n);
            for mask in 0..1u32 << (n * (n - 1) / 2) {
                let g = labeled(n, mask);
                let cf = canonical_form(&g);
                assert_eq!(cf.code, brute_min(&g, &perms), "{g:?}");
                assert_eq!(CanonicalCode::of(&g.permute(&cf.perm())), cf.code);
            }
        }
    }

    #[test]
    fn matches_permutation_sweep_sampled_six_and_seven() {
        for n in [6usize, 7] {
            let perms = all_perms(n);
            let pairs = n * (n - 1) / 2;
            let mut x = 0x9e37_79b9_u64;
            for _ in 0..150 {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                let g = labeled(n, (x as u32) & ((1u32 << pairs) - 1));
                assert_eq!(canonical_code(&g), brute_min(&g, &perms));
            }
        }
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let mut codes: Vec<_> = (0..64).map(|m| canonical_code(&labeled(4, m))).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn c4_relabelings_agree() {
        let c4 = Graph::cycle(4).unwrap();
        let code = canonical_code(&c4);
        for p in all_perms(4) {
            assert_eq!(canonical_code(&c4.permute(&p)), code);
        }
        assert_ne!(code, canonical_code(&Graph::path(4).unwrap()));
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(are_isomorphic(&c4, &c4.permute(&[2, 0, 3, 1])));
        assert!(!are_isomorphic(&Graph::complete_bipartite(1, 3).unwrap(), &Graph::path(4).unwrap()));
        let k23 = Graph::complete_bipartite(2, 3).unwrap();
        let c5_chord = Graph::cycle(5).unwrap().with_edge(0, 2);
        assert_eq!(k23.size(), c5_chord.size());
        assert!(!are_isomorphic(&k23, &c5_chord));
        assert!(!are_isomorphic(&Graph::empty(3).unwrap(), &Graph::empty(4).unwrap()));
    }

    #[test]
    fn canonical_graph_is_idempotent() {
        for mask in 0..1u32 << 10 {
            let g = labeled(5, mask);
            let c = canonical_graph(&g);
            assert!(canonical_form(&c).is_identity());
            assert!(is_canonical(&c));
            assert_eq!(is_canonical(&g), c == g);
        }
    }

    #[test]
    fn decode_round_trips() {
        let g = Graph::build(6, &[(0, 5), (1, 2), (2, 5), (3, 4)]).unwrap();
        assert_eq!(CanonicalCode::of(&g).decode(), g);
    }
}
