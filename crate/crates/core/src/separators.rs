//! Minimal vertex separators and the separator path-length condition.
//!
//! For a minimal separator `S`, non-adjacent `x, y ∈ S`, and two components
//! `C`, `D` of `G - S`, a longest chordless `x`–`y` path through `C` and one
//! through `D` close into an induced cycle. A graph is k-chordal iff every
//! such pair of paths has total length at most `k`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::chordality::InducedCycle;
use crate::graph::Graph;
use crate::paths::{ChordlessPaths, InducedPath};

/// A minimal vertex separator together with the components it leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SeparatorRecord {
    #[cfg_attr(feature = "serde", serde(rename = "s"))]
    pub separator: VertexSet,
    /// Two vertices in different full components.
    pub pair: (usize, usize),
    /// Components of `G - S`, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    /// Components `C` with `N(C) = S`.
    pub full_components: Vec<VertexSet>,
}

impl SeparatorRecord {
    fn new(g: &Graph, separator: VertexSet) -> SeparatorRecord {
        let components = g.components_within(&separator.complement());
        let full_components: Vec<VertexSet> = components
            .iter()
            .filter(|c| g.open_neighbourhood(c) == separator)
            .cloned()
            .collect();
        debug_assert!(full_components.len() >= 2);
        let pair = (
            full_components[0].first().expect("non-empty component"),
            full_components[1].first().expect("non-empty component"),
        );
        SeparatorRecord {
            separator,
            pair,
            components,
            full_components,
        }
    }

    /// The component of `G - S` containing `v`.
    pub fn component_of(&self, v: usize) -> Option<&VertexSet> {
        self.components.iter().find(|c| c.contains(v))
    }
}

/// Every non-empty minimal vertex separator of `g`, once each.
///
/// Seeds are `N(C)` for components `C` of `G - N[v]`; each separator `S` is
/// then expanded through `N(C)` for components `C` of `G - (S ∪ N(x))`,
/// `x ∈ S`, until closure. Separators within one connected component are
/// produced; the empty set between components is not.
pub fn enumerate_minimal_separators(g: &Graph) -> MinimalSeparators<'_> {
    MinimalSeparators {
        g,
        next_seed: 0,
        seen: BTreeSet::new(),
        ready: VecDeque::new(),
        to_expand: VecDeque::new(),
    }
}

pub struct MinimalSeparators<'g> {
    g: &'g Graph,
    next_seed: usize,
    seen: BTreeSet<VertexSet>,
    ready: VecDeque<VertexSet>,
    to_expand: VecDeque<VertexSet>,
}

impl MinimalSeparators<'_> {
    fn offer_components_of(&mut self, removed: &VertexSet) {
        for c in self.g.components_within(&removed.complement()) {
            let s = self.g.open_neighbourhood(&c);
            if !s.is_empty() && self.seen.insert(s.clone()) {
                self.ready.push_back(s.clone());
                self.to_expand.push_back(s);
            }
        }
    }
}

impl Iterator for MinimalSeparators<'_> {
    type Item = SeparatorRecord;

    fn next(&mut self) -> Option<SeparatorRecord> {
        loop {
            if let Some(s) = self.ready.pop_front() {
                return Some(SeparatorRecord::new(self.g, s));
            }
            if self.next_seed < self.g.n() {
                let v = self.next_seed;
                self.next_seed += 1;
                let closed = self.g.closed_neighbours(v);
                self.offer_components_of(&closed);
                continue;
            }
            let s = self.to_expand.pop_front()?;
            for x in &s {
                let removed = s.union(self.g.neighbours(x));
                self.offer_components_of(&removed);
            }
        }
    }
}

/// A longest chordless `x`–`y` path with at least one internal vertex, all
/// internal vertices in `comp`.
pub fn longest_induced_xy_path_in_component(g: &Graph, x: usize, y: usize, comp: &VertexSet) -> Option<InducedPath> {
    assert!(
        !comp.contains(x) && !comp.contains(y),
        "endpoints must lie outside the component"
    );
    let mut best: Option<InducedPath> = None;
    for p in ChordlessPaths::new(g, x, y, comp.clone(), 2) {
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p);
        }
    }
    best
}

/// Two chordless paths through different components whose lengths sum past `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SeparatorViolation {
    pub s: VertexSet,
    pub x: usize,
    pub y: usize,
    pub path_i: InducedPath,
    pub path_j: InducedPath,
    pub comp_i: VertexSet,
    pub comp_j: VertexSet,
    pub k: usize,
}

impl SeparatorViolation {
    pub fn total_length(&self) -> usize {
        self.path_i.len() + self.path_j.len()
    }

    /// The cycle formed by `path_i` followed by `path_j` walked back to `x`.
    pub fn cycle(&self) -> InducedCycle {
        let mut vertices = self.path_i.vertices().to_vec();
        vertices.extend(self.path_j.internal().iter().rev());
        InducedCycle::new_unchecked(vertices)
    }
}

/// Compares the longest routes through each pair of components for every
/// non-adjacent pair in the separator. Only maxima are compared, which
/// decides the condition for all path pairs.
pub fn check_separator_condition(g: &Graph, rec: &SeparatorRecord, k: usize) -> Option<SeparatorViolation> {
    assert!(k >= 3, "k-chordality is defined for k >= 3");
    let s = &rec.separator;
    for x in s {
        for y in s.iter().filter(|&y| y > x && !g.adjacent(x, y)) {
            let routes: Vec<(&VertexSet, InducedPath)> = rec
                .components
                .iter()
                .filter(|c| g.neighbours(x).intersects(c) && g.neighbours(y).intersects(c))
                .filter_map(|c| longest_induced_xy_path_in_component(g, x, y, c).map(|p| (c, p)))
                .collect();
            for (i, (ci, pi)) in routes.iter().enumerate() {
                for (cj, pj) in &routes[i + 1..] {
                    if pi.len() + pj.len() > k {
                        return Some(SeparatorViolation {
                            s: s.clone(),
                            x,
                            y,
                            path_i: pi.clone(),
                            path_j: pj.clone(),
                            comp_i: (*ci).clone(),
                            comp_j: (*cj).clone(),
                            k,
                        });
                    }
                }
            }
        }
    }
    None
}

/// The first separator violation in enumeration order.
pub fn find_separator_violation(g: &Graph, k: usize) -> Option<SeparatorViolation> {
    assert!(k >= 3, "k-chordality is defined for k >= 3");
    enumerate_minimal_separators(g).find_map(|rec| check_separator_condition(g, &rec, k))
}

/// k-chordality decided through minimal separators alone.
pub fn is_k_chordal_via_separators(g: &Graph, k: usize) -> bool {
    find_separator_violation(g, k).is_none()
}
