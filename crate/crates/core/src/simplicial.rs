//! k-simplicial vertices and k-simplicial elimination orderings.
//!
//! A vertex `v` is k-simplicial when
//!
//! * (C1) any two neighbours of `v` are within distance `k - 2` in `G - v`, and
//! * (C2) no chordless path of more than `k - 2` edges joins two non-adjacent
//!   neighbours of `v` through vertices outside `N[v]`.
//!
//! Every function taking an `alive` set evaluates the property in the induced
//! subgraph `G[alive]` while keeping the host graph's vertex numbering.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::paths::{ChordlessPaths, InducedPath};

fn check_k(k: usize) {
    assert!(k >= 3, "k-simplicial vertices are defined for k >= 3");
}

/// Outcome of testing one vertex against both conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SimplicialVerdict {
    pub vertex: usize,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub k: usize,
    pub c1: bool,
    pub c2: bool,
    /// A chordless path of more than `k - 2` edges when C2 fails.
    #[cfg_attr(feature = "serde", serde(rename = "witness"))]
    pub c2_witness: Option<InducedPath>,
}

impl SimplicialVerdict {
    pub fn is_k_simplicial(&self) -> bool {
        self.c1 && self.c2
    }
}

/// C1: `N(v)` is a clique in `(G - v)^(k-2)`.
pub fn check_c1(g: &Graph, v: usize, k: usize) -> bool {
    check_c1_in(g, &g.vertices(), v, k)
}

/// C1 evaluated in `G[alive]`.
pub fn check_c1_in(g: &Graph, alive: &VertexSet, v: usize, k: usize) -> bool {
    check_k(k);
    assert!(alive.contains(v), "vertex {v} is not alive");
    let nbrs = g.neighbours(v).intersection(alive);
    let mut rest = alive.clone();
    rest.remove(v);
    nbrs.iter().all(|x| {
        let dist = g.bfs_within(x, &rest, Some(k - 2));
        nbrs.iter().filter(|&y| y > x).all(|y| dist[y].is_some())
    })
}

/// The first chordless path violating C2, scanning non-adjacent neighbour
/// pairs `(x, y)`, `x < y`, in index order.
pub fn c2_violation(g: &Graph, v: usize, k: usize) -> Option<InducedPath> {
    c2_violation_in(g, &g.vertices(), v, k)
}

/// [`c2_violation`] evaluated in `G[alive]`.
pub fn c2_violation_in(g: &Graph, alive: &VertexSet, v: usize, k: usize) -> Option<InducedPath> {
    check_k(k);
    assert!(alive.contains(v), "vertex {v} is not alive");
    let nbrs = g.neighbours(v).intersection(alive);
    let mut internal = alive.difference(g.neighbours(v));
    internal.remove(v);
    for x in &nbrs {
        for y in nbrs.iter().filter(|&y| y > x && !g.adjacent(x, y)) {
            let found = ChordlessPaths::new(g, x, y, internal.clone(), k - 1).next();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// C2: every chordless path between non-adjacent neighbours of `v`, with
/// internal vertices outside `N[v]`, has at most `k - 2` edges.
pub fn check_c2(g: &Graph, v: usize, k: usize) -> bool {
    c2_violation(g, v, k).is_none()
}

pub fn is_k_simplicial(g: &Graph, v: usize, k: usize) -> SimplicialVerdict {
    is_k_simplicial_in(g, &g.vertices(), v, k)
}

/// Tests whether `v` is k-simplicial in `G[alive]`.
pub fn is_k_simplicial_in(g: &Graph, alive: &VertexSet, v: usize, k: usize) -> SimplicialVerdict {
    let c1 = check_c1_in(g, alive, v, k);
    let c2_witness = c2_violation_in(g, alive, v, k);
    SimplicialVerdict {
        vertex: v,
        k,
        c1,
        c2: c2_witness.is_none(),
        c2_witness,
    }
}

/// Why a constructive search could not produce its vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    EmptyGraph,
    /// Two non-adjacent vertices do not exist in a complete graph.
    CompleteGraph,
    /// The seed is adjacent to every other vertex.
    DominatingSeed {
        seed: usize,
    },
    /// The found vertex failed re-verification; the input is not k-chordal.
    HypothesisViolated(SimplicialVerdict),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::EmptyGraph => f.write_str("graph has no vertices"),
            ConstructionError::CompleteGraph => f.write_str("graph is complete"),
            ConstructionError::DominatingSeed { seed } => {
                write!(f, "seed {seed} dominates the graph")
            }
            ConstructionError::HypothesisViolated(v) => write!(
                f,
                "vertex {} is not {}-simplicial (c1={}, c2={}); input is not {}-chordal",
                v.vertex, v.k, v.c1, v.c2, v.k
            ),
        }
    }
}

fn closed_within(g: &Graph, alive: &VertexSet, a: &VertexSet) -> VertexSet {
    g.closed_neighbourhood(a).intersection(alive)
}

/// Grows a maximal connected non-dominating set from `seed`.
///
/// The frontier `N(A)` is scanned in index order and the first vertex whose
/// addition keeps `N[A]` a proper subset of `V` is added, until none
/// qualifies. Every vertex outside `N[A]` is then adjacent to every vertex
/// of `N(A)`.
pub fn max_connected_nondominating_set(g: &Graph, seed: usize) -> Result<VertexSet, ConstructionError> {
    max_connected_nondominating_set_in(g, &g.vertices(), seed)
}

pub fn max_connected_nondominating_set_in(
    g: &Graph,
    alive: &VertexSet,
    seed: usize,
) -> Result<VertexSet, ConstructionError> {
    assert!(alive.contains(seed), "seed {seed} is not alive");
    let mut a = VertexSet::singleton(g.n(), seed);
    if closed_within(g, alive, &a) == *alive {
        return Err(ConstructionError::DominatingSeed { seed });
    }
    loop {
        let frontier = g.open_neighbourhood(&a).intersection(alive);
        let grow = frontier.iter().find(|&x| {
            let mut bigger = a.clone();
            bigger.insert(x);
            closed_within(g, alive, &bigger) != *alive
        });
        match grow {
            Some(x) => {
                a.insert(x);
            }
            None => return Ok(a),
        }
    }
}

fn verified(g: &Graph, v: usize, k: usize) -> Result<usize, ConstructionError> {
    let verdict = is_k_simplicial(g, v, k);
    if verdict.is_k_simplicial() {
        Ok(v)
    } else {
        Err(ConstructionError::HypothesisViolated(verdict))
    }
}

// Recursive step: a complete `G[within]` returns its smallest vertex,
// otherwise seed a maximal connected non-dominating set and descend into
// what it leaves undominated.
fn constructive_in(g: &Graph, within: &VertexSet) -> usize {
    if g.is_clique(within) {
        return within.first().expect("non-empty vertex set");
    }
    let seed = within
        .iter()
        .find(|&v| !within.is_subset(&g.closed_neighbours(v)))
        .expect("non-complete graph has a non-dominating vertex");
    let a = max_connected_nondominating_set_in(g, within, seed).expect("seed has a non-neighbour");
    simplicial_outside(g, within, &a)
}

// A vertex of B = within \ N[A] that is simplicial in G[B]: the smallest
// vertex of a complete component if there is one, else recurse into the
// first component.
fn simplicial_outside(g: &Graph, within: &VertexSet, a: &VertexSet) -> usize {
    let b = within.difference(&closed_within(g, within, a));
    let comps = g.components_within(&b);
    match comps.iter().find(|c| g.is_clique(c)) {
        Some(c) => c.first().expect("components are non-empty"),
        None => constructive_in(g, &comps[0]),
    }
}

/// Finds a k-simplicial vertex by the maximal-connected-non-dominating-set
/// recursion. The result is re-verified; on graphs that are not k-chordal
/// the verification may fail.
pub fn find_k_simplicial_constructive(g: &Graph, k: usize) -> Result<usize, ConstructionError> {
    check_k(k);
    if g.n() == 0 {
        return Err(ConstructionError::EmptyGraph);
    }
    verified(g, constructive_in(g, &g.vertices()), k)
}

/// Two non-adjacent k-simplicial vertices of a non-complete graph, returned
/// in increasing order.
///
/// The first vertex `u` comes from [`find_k_simplicial_constructive`]; the
/// second is found outside `N[A']` for a maximal connected non-dominating
/// set `A'` grown from `u`.
pub fn find_two_nonadjacent_k_simplicial(g: &Graph, k: usize) -> Result<(usize, usize), ConstructionError> {
    check_k(k);
    if g.n() == 0 {
        return Err(ConstructionError::EmptyGraph);
    }
    if g.is_complete() {
        return Err(ConstructionError::CompleteGraph);
    }
    let all = g.vertices();
    let u = verified(g, constructive_in(g, &all), k)?;
    let a = max_connected_nondominating_set(g, u)?;
    let v = verified(g, simplicial_outside(g, &all, &a), k)?;
    debug_assert!(!g.adjacent(u, v) && u != v);
    Ok((u.min(v), u.max(v)))
}

/// Proof that `order` eliminates every vertex k-simplicially.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrderingCertificate {
    pub order: Vec<usize>,
    pub k: usize,
    /// `steps[i]` is the verdict for `order[i]` in `G[order[i..]]`.
    pub steps: Vec<SimplicialVerdict>,
}

/// A residual graph with no k-simplicial vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FailureWitness {
    pub k: usize,
    /// Position at which elimination got stuck.
    pub step: usize,
    pub eliminated: Vec<usize>,
    pub residual: VertexSet,
    /// One failing verdict per residual vertex, in index order.
    pub verdicts: Vec<SimplicialVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum EliminationOutcome {
    Certificate(OrderingCertificate),
    Stuck(FailureWitness),
}

impl EliminationOutcome {
    pub fn is_certificate(&self) -> bool {
        matches!(self, EliminationOutcome::Certificate(_))
    }

    pub fn certificate(&self) -> Option<&OrderingCertificate> {
        match self {
            EliminationOutcome::Certificate(c) => Some(c),
            EliminationOutcome::Stuck(_) => None,
        }
    }
}

/// Greedy k-simplicial elimination, lowest index first.
pub fn k_simplicial_ordering(g: &Graph, k: usize) -> EliminationOutcome {
    check_k(k);
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    let mut steps = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let mut failed = Vec::new();
        let mut chosen = None;
        for v in &alive {
            let verdict = is_k_simplicial_in(g, &alive, v, k);
            if verdict.is_k_simplicial() {
                chosen = Some(verdict);
                break;
            }
            failed.push(verdict);
        }
        let Some(verdict) = chosen else {
            return EliminationOutcome::Stuck(FailureWitness {
                k,
                step: order.len(),
                eliminated: order,
                residual: alive,
                verdicts: failed,
            });
        };
        alive.remove(verdict.vertex);
        order.push(verdict.vertex);
        steps.push(verdict);
    }
    EliminationOutcome::Certificate(OrderingCertificate { order, k, steps })
}

pub fn is_permutation(order: &[usize], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = VertexSet::new(n);
    order.iter().all(|&v| v < n && seen.insert(v))
}

/// The first position of an ordering whose vertex is not k-simplicial in
/// its residual graph.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RejectedStep {
    pub position: usize,
    pub verdict: SimplicialVerdict,
}

/// Checks that each `order[i]` is k-simplicial in `G[order[i..]]`.
///
/// Panics if `order` is not a permutation of the vertices.
pub fn verify_ordering(g: &Graph, order: &[usize], k: usize) -> Result<(), RejectedStep> {
    check_k(k);
    assert!(
        is_permutation(order, g.n()),
        "ordering is not a permutation of the vertices"
    );
    let mut alive = g.vertices();
    for (position, &v) in order.iter().enumerate() {
        let verdict = is_k_simplicial_in(g, &alive, v, k);
        if !verdict.is_k_simplicial() {
            return Err(RejectedStep { position, verdict });
        }
        alive.remove(v);
    }
    Ok(())
}
