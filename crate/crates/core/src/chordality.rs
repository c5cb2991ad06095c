//! Exact chordality: the length of a longest induced cycle.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A cycle whose vertex set induces exactly the cycle edges.
///
/// Stored in canonical form: smallest vertex first, and the smaller of its
/// two cycle neighbours second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct InducedCycle {
    vertices: Vec<usize>,
}

impl InducedCycle {
    /// Validates `vertices` as an induced cycle of `g` and canonicalizes it.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Option<InducedCycle> {
        if !is_induced_cycle(g, &vertices) {
            return None;
        }
        Some(InducedCycle {
            vertices: canonical_rotation(vertices),
        })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> InducedCycle {
        InducedCycle {
            vertices: canonical_rotation(vertices),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_induced_in(&self, g: &Graph) -> bool {
        is_induced_cycle(g, &self.vertices)
    }
}

fn canonical_rotation(mut vertices: Vec<usize>) -> Vec<usize> {
    let m = vertices.len();
    if m == 0 {
        return vertices;
    }
    let lo = (0..m).min_by_key(|&i| vertices[i]).unwrap_or(0);
    vertices.rotate_left(lo);
    if m > 2 && vertices[m - 1] < vertices[1] {
        vertices[1..].reverse();
    }
    vertices
}

/// True iff `vertices` (at least three, distinct) is a chordless cycle of `g`.
pub fn is_induced_cycle(g: &Graph, vertices: &[usize]) -> bool {
    let m = vertices.len();
    if m < 3 || vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            let (u, v) = (vertices[i], vertices[j]);
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if u == v || g.adjacent(u, v) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Longest induced cycle length, with a witness. Zero when there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalityResult {
    pub value: usize,
    pub witness: Option<InducedCycle>,
}

/// Computes the chordality of `g` in a single enumeration pass.
///
/// The witness is the first longest cycle in enumeration order.
pub fn chordality(g: &Graph) -> ChordalityResult {
    let mut best: Option<InducedCycle> = None;
    for c in enumerate_induced_cycles(g, 3) {
        if best.as_ref().is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    }
    ChordalityResult {
        value: best.as_ref().map_or(0, InducedCycle::len),
        witness: best,
    }
}

/// The first induced cycle longer than `k`, if any.
pub fn long_induced_cycle(g: &Graph, k: usize) -> Option<InducedCycle> {
    assert!(k >= 3, "k-chordality is defined for k >= 3");
    enumerate_induced_cycles(g, k + 1).next()
}

/// True iff every induced cycle of `g` has length at most `k`.
pub fn is_k_chordal(g: &Graph, k: usize) -> bool {
    long_induced_cycle(g, k).is_none()
}

/// Every induced cycle of length at least `min_len`, once each up to rotation
/// and reflection, in a deterministic order.
pub fn enumerate_induced_cycles(g: &Graph, min_len: usize) -> InducedCycles<'_> {
    assert!(min_len >= 3, "cycles have at least three vertices");
    InducedCycles {
        g,
        min_len,
        start: 0,
        above: VertexSet::new(g.n()),
        path: Vec::new(),
        candidates: Vec::new(),
        blocked: Vec::new(),
    }
}

/// Chordless-path extension from a forced minimum vertex.
///
/// A partial path `v0 v1 .. vt` (all vertices above `v0`, chordless) is
/// extended by a neighbour `w` of `vt` that misses `N[v1] ∪ .. ∪ N[v(t-1)]`.
/// If `w` is adjacent to `v0` the cycle closes; it is reported only when
/// `v1 < w`, which fixes the direction.
pub struct InducedCycles<'g> {
    g: &'g Graph,
    min_len: usize,
    start: usize,
    above: VertexSet,
    path: Vec<usize>,
    candidates: Vec<VertexSet>,
    blocked: Vec<VertexSet>,
}

impl InducedCycles<'_> {
    fn push(&mut self, v: usize, blocked: VertexSet) {
        let mut c = self.g.neighbours(v).intersection(&self.above);
        c.difference_with(&blocked);
        self.path.push(v);
        self.candidates.push(c);
        self.blocked.push(blocked);
    }
}

impl Iterator for InducedCycles<'_> {
    type Item = InducedCycle;

    fn next(&mut self) -> Option<InducedCycle> {
        let n = self.g.n();
        loop {
            if self.path.is_empty() {
                if self.start >= n {
                    return None;
                }
                self.above = VertexSet::above(n, self.start);
                let start = self.start;
                self.start += 1;
                self.push(start, VertexSet::new(n));
                continue;
            }
            let next = self.candidates.last_mut().and_then(VertexSet::pop_first);
            let Some(w) = next else {
                self.path.pop();
                self.candidates.pop();
                self.blocked.pop();
                continue;
            };
            let v0 = self.path[0];
            let depth = self.path.len() - 1;
            if depth >= 1 && self.g.adjacent(w, v0) {
                if w > self.path[1] && depth + 2 >= self.min_len {
                    let mut vertices = self.path.clone();
                    vertices.push(w);
                    return Some(InducedCycle { vertices });
                }
                continue;
            }
            let mut blocked = self.blocked.last().expect("non-empty path").clone();
            if depth >= 1 {
                blocked.union_with(&self.g.closed_neighbours(self.path[depth]));
            }
            self.push(w, blocked);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::vec;
    use std::vec::Vec;

    fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    fn k23() -> Graph {
        Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    // Oracle: every vertex subset of size >= 3 that induces a 2-regular
    // connected graph is exactly one induced cycle.
    fn brute_force_cycle_lengths(g: &Graph) -> Vec<usize> {
        let n = g.n();
        let mut out = Vec::new();
        for mask in 1u32..1 << n {
            let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if s.len() < 3 {
                continue;
            }
            let two_regular = s.iter().all(|v| g.neighbours(v).intersection(&s).len() == 2);
            if two_regular && g.components_within(&s).len() == 1 {
                out.push(s.len());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn trees_have_chordality_zero() {
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let r = chordality(&tree);
        assert_eq!(r.value, 0);
        assert!(r.witness.is_none());
        assert_eq!(chordality(&Graph::empty(0)).value, 0);
    }

    #[test]
    fn small_named_graphs() {
        let r = chordality(&Graph::cycle(5));
        assert_eq!(r.value, 5);
        assert_eq!(r.witness.unwrap().vertices(), [0, 1, 2, 3, 4]);
        assert_eq!(chordality(&Graph::complete(4)).value, 3);
    }

    #[test]
    fn petersen_has_chordality_six() {
        // Deleting a closed neighbourhood leaves an induced hexagon.
        let g = petersen();
        let lengths = brute_force_cycle_lengths(&g);
        assert_eq!(lengths.iter().max(), Some(&6));
        let r = chordality(&g);
        assert_eq!(r.value, 6);
        assert!(r.witness.unwrap().is_induced_in(&g));
    }

    #[test]
    fn k_chordal_examples() {
        assert!(!is_k_chordal(&Graph::cycle(5), 4));
        assert!(is_k_chordal(&Graph::cycle(5), 5));
        let fan = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(is_k_chordal(&fan, 3));
    }

    #[test]
    #[should_panic(expected = "k >= 3")]
    fn k_below_three_is_rejected() {
        is_k_chordal(&Graph::cycle(4), 2);
    }

    #[test]
    fn enumeration_examples() {
        let c6: Vec<_> = enumerate_induced_cycles(&Graph::cycle(6), 3).collect();
        assert_eq!(c6.len(), 1);
        assert_eq!(c6[0].len(), 6);
        assert_eq!(enumerate_induced_cycles(&Graph::complete(4), 4).count(), 0);
        let k23: Vec<_> = enumerate_induced_cycles(&k23(), 4).collect();
        assert_eq!(brute_force_cycle_lengths(&self::k23()), [4, 4, 4]);
        assert_eq!(k23.len(), 3);
        assert_eq!(
            k23.iter().map(|c| c.vertices().to_vec()).collect::<Vec<_>>(),
            [vec![0, 2, 1, 3], vec![0, 2, 1, 4], vec![0, 3, 1, 4]]
        );
    }

    #[test]
    fn cycles_have_their_own_length() {
        for n in 3..=12 {
            let r = chordality(&Graph::cycle(n));
            assert_eq!(r.value, n);
        }
    }

    #[test]
    fn canonical_form() {
        let c5 = Graph::cycle(5);
        let c = InducedCycle::new(&c5, vec![3, 2, 1, 0, 4]).unwrap();
        assert_eq!(c.vertices(), [0, 1, 2, 3, 4]);
        assert!(InducedCycle::new(&c5, vec![0, 1, 2]).is_none());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (3..=max_n).prop_flat_map(|n| {
            let bits = n * (n - 1) / 2;
            (0u64..1 << bits).prop_map(move |m| Graph::from_edge_mask(n, m))
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_subset_oracle(g in arb_graph(8)) {
            let mut got: Vec<usize> = enumerate_induced_cycles(&g, 3).map(|c| {
                assert!(c.is_induced_in(&g));
                c.len()
            }).collect();
            got.sort();
            prop_assert_eq!(got, brute_force_cycle_lengths(&g));
        }

        #[test]
        fn k_chordal_iff_no_long_cycle(g in arb_graph(8), k in 3usize..8) {
            let value = chordality(&g).value;
            prop_assert_eq!(is_k_chordal(&g, k), value <= k);
            prop_assert_eq!(enumerate_induced_cycles(&g, k + 1).next().is_none(), value <= k);
        }

        #[test]
        fn hereditary(g in arb_graph(8), bits in any::<u32>(), k in 3usize..7) {
            prop_assume!(is_k_chordal(&g, k));
            let s = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| bits >> v & 1 == 1));
            prop_assert!(is_k_chordal(&g.induced_subgraph(&s).graph, k));
        }
    }
}
