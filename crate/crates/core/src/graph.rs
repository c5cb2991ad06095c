//! Simple undirected graphs over dense vertex indices `0..n`.
//!
//! A [`Graph`] is immutable once built. Derived graphs (powers, induced
//! subgraphs) are fresh values.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;

/// Rejected edge input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    OutOfRange { vertex: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::OutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
        }
    }
}

/// Shortest-path distance; `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_within(self, bound: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= bound)
    }
}

/// Simple undirected graph with per-vertex bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// The `i`-th unordered vertex pair in upper-triangle column order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
///
/// This is the bit order of graph6 and of edge masks.
pub fn pair_index(u: usize, v: usize) -> usize {
    let (i, j) = if u < v { (u, v) } else { (v, u) };
    j * (j - 1) / 2 + i
}

/// Number of unordered vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Graph whose edges are the set bits of `mask`, in [`pair_index`] order.
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        assert!(pair_count(n) <= 64, "edge mask too narrow for {n} vertices");
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    pub fn edge_mask(&self) -> u64 {
        assert!(pair_count(self.n()) <= 64, "graph too large for an edge mask");
        self.edges().fold(0, |mask, (u, v)| mask | 1 << pair_index(u, v))
    }

    pub fn complete(n: usize) -> Graph {
        Graph {
            adj: (0..n)
                .map(|v| {
                    let mut s = VertexSet::full(n);
                    s.remove(v);
                    s
                })
                .collect(),
        }
    }

    /// The path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood N[v].
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_set(&self, a: &VertexSet) {
        assert_eq!(a.universe(), self.n(), "vertex set universe does not match graph order");
    }

    /// N(A): vertices outside `a` with a neighbour in `a`.
    pub fn open_neighbourhood(&self, a: &VertexSet) -> VertexSet {
        self.check_set(a);
        let mut out = VertexSet::new(self.n());
        for v in a {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(a);
        out
    }

    /// N[A] = A ∪ N(A).
    pub fn closed_neighbourhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = self.open_neighbourhood(a);
        out.union_with(a);
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(&self.vertices())
    }

    /// Breadth-first distances from `source` through vertices of `within`,
    /// stopping at depth `limit`. Vertices not reached get `None`.
    pub(crate) fn bfs_within(&self, source: usize, within: &VertexSet, limit: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.n()];
        if !within.contains(source) {
            return dist;
        }
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            if limit.is_some_and(|l| d >= l) {
                continue;
            }
            for w in self.adj[u].intersection(within).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices reachable from `source` inside `within`.
    pub(crate) fn reach_within(&self, source: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n());
        if !within.contains(source) {
            return seen;
        }
        seen.insert(source);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.open_neighbourhood(&frontier);
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn distance(&self, u: usize, v: usize) -> Distance {
        assert!(u < self.n() && v < self.n(), "vertex out of range");
        match self.bfs_within(u, &self.vertices(), None)[v] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        }
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.check_set(within);
        let mut rest = within.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, &rest);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Connected components, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// `G[s]`, relabelled to `0..|s|` in increasing original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        self.check_set(s);
        let original: Vec<usize> = s.iter().collect();
        let mut local = alloc::vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            local[v] = i;
        }
        let m = original.len();
        let adj = original
            .iter()
            .map(|&v| VertexSet::from_vertices(m, self.adj[v].intersection(s).iter().map(|w| local[w])))
            .collect();
        InducedSubgraph {
            graph: Graph { adj },
            original,
        }
    }

    /// The power graph: `{u,v}` is an edge iff `d(u,v) <= k`.
    pub fn power(&self, k: usize) -> Graph {
        assert!(k >= 1, "graph power exponent must be at least 1");
        let all = self.vertices();
        let adj = (0..self.n())
            .map(|u| {
                let dist = self.bfs_within(u, &all, Some(k));
                VertexSet::from_vertices(self.n(), (0..self.n()).filter(|&v| v != u && dist[v].is_some()))
            })
            .collect();
        Graph { adj }
    }

    /// `(G - v)^k`, with the relabelling back to this graph's indices.
    pub fn minus_vertex_power(&self, v: usize, k: usize) -> InducedSubgraph {
        assert!(v < self.n(), "vertex {v} out of range");
        let mut rest = self.vertices();
        rest.remove(v);
        let sub = self.induced_subgraph(&rest);
        InducedSubgraph {
            graph: sub.graph.power(k),
            original: sub.original,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

/// A derived graph together with the original index of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the host index of local vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn to_original(&self, local: usize) -> usize {
        self.original[local]
    }

    pub fn to_local(&self, original: usize) -> Option<usize> {
        self.original.binary_search(&original).ok()
    }
}
