//! Chordless (induced) paths and their depth-first enumeration.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A path whose vertex set induces exactly the path edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct InducedPath {
    vertices: Vec<usize>,
}

impl InducedPath {
    /// Wraps a vertex sequence, checking it against `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Option<InducedPath> {
        is_chordless_path(g, &vertices).then_some(InducedPath { vertices })
    }

    pub(crate) fn new_unchecked(vertices: Vec<usize>) -> InducedPath {
        debug_assert!(vertices.len() >= 2);
        InducedPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn internal(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn reversed(&self) -> InducedPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        InducedPath { vertices }
    }

    pub fn is_chordless_in(&self, g: &Graph) -> bool {
        is_chordless_path(g, &self.vertices)
    }
}

/// True iff `vertices` (at least two, all distinct) is a path of `g` with no chord.
pub fn is_chordless_path(g: &Graph, vertices: &[usize]) -> bool {
    if vertices.len() < 2 || vertices.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if u == v || g.adjacent(u, v) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

/// All chordless `x`–`y` paths whose internal vertices avoid `forbidden_internal`,
/// with at least `min_len` edges. The endpoints are exempt from the restriction.
pub fn enumerate_chordless_paths<'g>(
    g: &'g Graph,
    x: usize,
    y: usize,
    forbidden_internal: &VertexSet,
    min_len: usize,
) -> ChordlessPaths<'g> {
    ChordlessPaths::new(g, x, y, forbidden_internal.complement(), min_len)
}

/// Depth-first enumeration of chordless paths from `x` to `y` with internal
/// vertices drawn from an allowed set.
///
/// Each path is produced once, in lexicographic order of its vertex sequence.
pub struct ChordlessPaths<'g> {
    g: &'g Graph,
    target: usize,
    allowed: VertexSet,
    min_len: usize,
    path: Vec<usize>,
    candidates: Vec<VertexSet>,
    // blocked[t]: union of closed neighbourhoods of path[0..t]
    blocked: Vec<VertexSet>,
}

impl<'g> ChordlessPaths<'g> {
    pub fn new(g: &'g Graph, x: usize, y: usize, allowed: VertexSet, min_len: usize) -> Self {
        assert!(x < g.n() && y < g.n(), "endpoint out of range");
        assert_ne!(x, y, "chordless path endpoints must differ");
        let mut allowed = allowed;
        allowed.remove(x);
        allowed.remove(y);
        let mut walk = ChordlessPaths {
            g,
            target: y,
            allowed,
            min_len,
            path: Vec::new(),
            candidates: Vec::new(),
            blocked: Vec::new(),
        };
        let none = VertexSet::new(g.n());
        walk.push(x, none);
        walk
    }

    fn push(&mut self, v: usize, blocked: VertexSet) {
        let cands = if self.g.adjacent(v, self.target) {
            VertexSet::singleton(self.g.n(), self.target)
        } else {
            let mut c = self.g.neighbours(v).intersection(&self.allowed);
            c.difference_with(&blocked);
            c
        };
        self.path.push(v);
        self.candidates.push(cands);
        self.blocked.push(blocked);
    }

    fn pop(&mut self) {
        self.path.pop();
        self.candidates.pop();
        self.blocked.pop();
    }
}

impl Iterator for ChordlessPaths<'_> {
    type Item = InducedPath;

    fn next(&mut self) -> Option<InducedPath> {
        loop {
            let next = self.candidates.last_mut()?.pop_first();
            let Some(w) = next else {
                self.pop();
                continue;
            };
            if w == self.target {
                if self.path.len() >= self.min_len {
                    let mut vertices = self.path.clone();
                    vertices.push(w);
                    return Some(InducedPath::new_unchecked(vertices));
                }
                continue;
            }
            let top = *self.path.last().expect("non-empty path");
            let mut blocked = self.blocked.last().expect("non-empty path").clone();
            blocked.union_with(&self.g.closed_neighbours(top));
            self.push(w, blocked);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;
    use std::vec::Vec;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn collect(g: &Graph, x: usize, y: usize, forbidden: &[usize], min_len: usize) -> Vec<Vec<usize>> {
        enumerate_chordless_paths(g, x, y, &set(g.n(), forbidden), min_len)
            .map(|p| p.vertices().to_vec())
            .collect()
    }

    #[test]
    fn c5_route_avoiding_closed_neighbourhood() {
        let c5 = Graph::cycle(5);
        assert_eq!(collect(&c5, 1, 4, &[0, 1, 4], 1), [vec![1, 2, 3, 4]]);
    }

    #[test]
    fn chord_between_endpoints_kills_longer_paths() {
        let k4 = Graph::complete(4);
        assert!(collect(&k4, 0, 1, &[], 2).is_empty());
        assert_eq!(collect(&k4, 0, 1, &[], 1), [vec![0, 1]]);
    }

    #[test]
    fn forbidden_cut_vertex_blocks_everything() {
        let p4 = Graph::path(4);
        assert!(collect(&p4, 0, 3, &[1], 0).is_empty());
        assert_eq!(collect(&p4, 0, 3, &[], 0), [vec![0, 1, 2, 3]]);
    }

    #[test]
    fn both_sides_of_a_cycle() {
        let c6 = Graph::cycle(6);
        assert_eq!(collect(&c6, 0, 3, &[], 1), [vec![0, 1, 2, 3], vec![0, 5, 4, 3]]);
        assert_eq!(collect(&c6, 0, 2, &[], 3), [vec![0, 5, 4, 3, 2]]);
    }

    #[test]
    fn validity_checker() {
        let c5 = Graph::cycle(5);
        assert!(is_chordless_path(&c5, &[0, 1, 2, 3]));
        assert!(!is_chordless_path(&c5, &[0, 1, 2, 3, 4]));
        assert!(!is_chordless_path(&c5, &[0, 2]));
        assert!(!is_chordless_path(&c5, &[0]));
        assert!(InducedPath::new(&c5, vec![4, 0, 1]).is_some());
    }

    // Brute force: every ordered sequence of distinct vertices from x to y.
    fn brute(g: &Graph, x: usize, y: usize, forbidden: &VertexSet, min_len: usize) -> Vec<Vec<usize>> {
        fn rec(g: &Graph, y: usize, forbidden: &VertexSet, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            for w in 0..g.n() {
                if seq.contains(&w) {
                    continue;
                }
                seq.push(w);
                if w == y {
                    if is_chordless_path(g, seq) {
                        out.push(seq.clone());
                    }
                } else if !forbidden.contains(w) {
                    rec(g, y, forbidden, seq, out);
                }
                seq.pop();
            }
        }
        let mut out = Vec::new();
        rec(g, y, forbidden, &mut vec![x], &mut out);
        out.retain(|p| p.len() > min_len);
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for mask in (0u64..1 << 15).step_by(37) {
            let g = Graph::from_edge_mask(6, mask);
            for (x, y) in [(0, 5), (1, 3), (2, 4)] {
                for forbidden in [set(6, &[]), set(6, &[1]), set(6, &[2, 4])] {
                    let got = collect(&g, x, y, &forbidden.iter().collect::<Vec<_>>(), 2);
                    assert_eq!(got, brute(&g, x, y, &forbidden, 2), "mask {mask}");
                }
            }
        }
    }
}
