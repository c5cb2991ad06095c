//! Graph corpora and the three-way equivalence check.
//!
//! For a graph `G` and `k >= 3` the following are decided independently and
//! must agree:
//!
//! 1. `G` is k-chordal (induced cycle enumeration);
//! 2. `G` has a k-simplicial elimination ordering;
//! 3. every minimal separator satisfies the path-length bound.

use alloc::vec::Vec;
use core::fmt;

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::chordality::{long_induced_cycle, InducedCycle};
use crate::graph::{pair_count, Graph};
use crate::separators::{find_separator_violation, SeparatorViolation};
use crate::simplicial::{check_c1, check_c2, k_simplicial_ordering, EliminationOutcome};

/// Largest order accepted by [`enumerate_labeled_graphs`] (2^21 graphs).
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCapError {
    pub requested: usize,
}

impl fmt::Display for EnumerationCapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "refusing to enumerate all labeled graphs on {} vertices (cap is {})",
            self.requested, MAX_ENUMERATION_ORDER
        )
    }
}

/// Every labeled simple graph on `n` vertices, in increasing edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> Result<LabeledGraphs, EnumerationCapError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationCapError { requested: n });
    }
    Ok(LabeledGraphs {
        n,
        next: 0,
        end: 1 << pair_count(n),
    })
}

/// All labeled graphs of order `0..=max_n`, smaller orders first.
pub fn labeled_graphs_up_to(max_n: usize) -> Result<impl Iterator<Item = Graph>, EnumerationCapError> {
    let orders = (0..=max_n)
        .map(enumerate_labeled_graphs)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(orders.into_iter().flatten())
}

pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Uniform draw in `[0, 1)` from the top 53 bits of one 64-bit output.
fn unit_interval(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)`.
///
/// The generator is SplitMix64 with its state set to `seed`. Vertex pairs are
/// visited in column order `(0,1), (0,2), (1,2), (0,3), ...`; each draws one
/// 64-bit output `r` and becomes an edge iff `(r >> 11) * 2^-53 < p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if unit_interval(&mut rng) < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated pairs are valid")
}

/// Evidence gathered by each route for one `(G, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Evidence {
    pub long_cycle: Option<InducedCycle>,
    pub ordering: EliminationOutcome,
    pub violation: Option<SeparatorViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EquivalenceReport {
    pub graph: Graph,
    pub k: usize,
    /// Chordality is at most `k`.
    pub verdict_i: bool,
    /// A k-simplicial ordering exists.
    pub verdict_ii: bool,
    /// Every minimal separator satisfies the path-length bound.
    pub verdict_iii: bool,
    pub agree: bool,
    /// Present only when the verdicts disagree.
    pub disagreement_witness: Option<Evidence>,
}

pub fn check_equivalence(g: &Graph, k: usize) -> EquivalenceReport {
    assert!(k >= 3, "k-chordality is defined for k >= 3");
    let long_cycle = long_induced_cycle(g, k);
    let ordering = k_simplicial_ordering(g, k);
    let violation = find_separator_violation(g, k);
    let verdict_i = long_cycle.is_none();
    let verdict_ii = ordering.is_certificate();
    let verdict_iii = violation.is_none();
    let agree = verdict_i == verdict_ii && verdict_ii == verdict_iii;
    EquivalenceReport {
        graph: g.clone(),
        k,
        verdict_i,
        verdict_ii,
        verdict_iii,
        agree,
        disagreement_witness: (!agree).then_some(Evidence {
            long_cycle,
            ordering,
            violation,
        }),
    }
}

/// Which values of `k` a sweep tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KSelection {
    Fixed(Vec<usize>),
    /// `3..=max(3, n)` for a graph on `n` vertices.
    UpToOrder,
}

impl KSelection {
    pub fn for_order(&self, n: usize) -> Vec<usize> {
        match self {
            KSelection::Fixed(ks) => ks.clone(),
            KSelection::UpToOrder => (3..=n.max(3)).collect(),
        }
    }
}

/// Verdict counts for one value of `k`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct KTally {
    pub k: usize,
    pub checks: usize,
    pub holds_i: usize,
    pub holds_ii: usize,
    pub holds_iii: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SweepSummary {
    pub graphs: usize,
    pub checks: usize,
    /// Sorted by `k`.
    pub per_k: Vec<KTally>,
    /// Every non-agreeing report, in input order.
    pub failures: Vec<EquivalenceReport>,
}

impl SweepSummary {
    pub fn disagreements(&self) -> usize {
        self.failures.len()
    }

    /// Folds in the reports for one graph.
    pub fn absorb_graph<I: IntoIterator<Item = EquivalenceReport>>(&mut self, reports: I) {
        self.graphs += 1;
        for r in reports {
            self.checks += 1;
            let pos = match self.per_k.binary_search_by_key(&r.k, |t| t.k) {
                Ok(i) => i,
                Err(i) => {
                    self.per_k.insert(
                        i,
                        KTally {
                            k: r.k,
                            ..KTally::default()
                        },
                    );
                    i
                }
            };
            let t = &mut self.per_k[pos];
            t.checks += 1;
            t.holds_i += usize::from(r.verdict_i);
            t.holds_ii += usize::from(r.verdict_ii);
            t.holds_iii += usize::from(r.verdict_iii);
            if !r.agree {
                t.disagreements += 1;
                self.failures.push(r);
            }
        }
    }
}

/// Runs [`check_equivalence`] for every graph and selected `k`, sequentially.
pub fn sweep<I: IntoIterator<Item = Graph>>(corpus: I, ks: &KSelection) -> SweepSummary {
    let mut summary = SweepSummary::default();
    for g in corpus {
        let reports: Vec<_> = ks
            .for_order(g.n())
            .into_iter()
            .map(|k| check_equivalence(&g, k))
            .collect();
        summary.absorb_graph(reports);
    }
    summary
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum IndependenceDirection {
    #[cfg_attr(feature = "serde", serde(rename = "C1_NOT_C2"))]
    C1NotC2,
    #[cfg_attr(feature = "serde", serde(rename = "C2_NOT_C1"))]
    C2NotC1,
}

/// A vertex satisfying exactly one of the two k-simplicial conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IndependenceWitness {
    pub direction: IndependenceDirection,
    pub graph: Graph,
    pub vertex: usize,
    pub k: usize,
}

impl IndependenceWitness {
    /// Re-evaluates both conditions.
    pub fn holds(&self) -> bool {
        let c1 = check_c1(&self.graph, self.vertex, self.k);
        let c2 = check_c2(&self.graph, self.vertex, self.k);
        match self.direction {
            IndependenceDirection::C1NotC2 => c1 && !c2,
            IndependenceDirection::C2NotC1 => c2 && !c1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IndependenceWitnesses {
    pub c1_not_c2: Option<IndependenceWitness>,
    pub c2_not_c1: Option<IndependenceWitness>,
}

/// Searches labeled graphs of order `1..=max_n` (then edge mask, vertex, and
/// `k` in the given order) for the first vertex of each direction.
pub fn find_independence_witnesses(max_n: usize, ks: &[usize]) -> Result<IndependenceWitnesses, EnumerationCapError> {
    for &k in ks {
        assert!(k >= 3, "k-simplicial vertices are defined for k >= 3");
    }
    let mut found = IndependenceWitnesses::default();
    for g in labeled_graphs_up_to(max_n)? {
        for v in 0..g.n() {
            for &k in ks {
                let c1 = check_c1(&g, v, k);
                let c2 = check_c2(&g, v, k);
                let slot = match (c1, c2) {
                    (true, false) => (&mut found.c1_not_c2, IndependenceDirection::C1NotC2),
                    (false, true) => (&mut found.c2_not_c1, IndependenceDirection::C2NotC1),
                    _ => continue,
                };
                if slot.0.is_none() {
                    *slot.0 = Some(IndependenceWitness {
                        direction: slot.1,
                        graph: g.clone(),
                        vertex: v,
                        k,
                    });
                }
            }
        }
        if found.c1_not_c2.is_some() && found.c2_not_c1.is_some() {
            break;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordality::chordality;
    use std::vec;
    use std::vec::Vec;

    // Reference SplitMix64 (Steele, Lea, Flood), written out independently.
    fn reference_splitmix(seed: u64, count: usize) -> Vec<u64> {
        let mut x = seed;
        (0..count)
            .map(|_| {
                x = x.wrapping_add(0x9e3779b97f4a7c15);
                let mut z = x;
                z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
                z ^ (z >> 31)
            })
            .collect()
    }

    #[test]
    fn generator_is_plain_splitmix64() {
        let mut rng = SplitMix64::seed_from_u64(42);
        let ours: Vec<u64> = (0..8).map(|_| rng.next_u64()).collect();
        assert_eq!(ours, reference_splitmix(42, 8));
        // Published first output for seed 0.
        assert_eq!(reference_splitmix(0, 1)[0], 0xe220a8397b1dcdaf);
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(9, 0.0, 7), Graph::empty(9));
        assert_eq!(random_graph(9, 1.0, 7), Graph::complete(9));
        assert_eq!(random_graph(0, 0.5, 7), Graph::empty(0));
    }

    #[test]
    fn random_graph_follows_documented_recipe() {
        let draws = reference_splitmix(42, 45);
        let mut edges = Vec::new();
        let mut i = 0;
        for b in 1..10 {
            for a in 0..b {
                if ((draws[i] >> 11) as f64) / 9007199254740992.0 < 0.5 {
                    edges.push((a, b));
                }
                i += 1;
            }
        }
        assert_eq!(random_graph(10, 0.5, 42), Graph::from_edges(10, edges).unwrap());
        assert_eq!(random_graph(10, 0.5, 42), random_graph(10, 0.5, 42));
        assert_ne!(random_graph(10, 0.5, 42), random_graph(10, 0.5, 43));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(6).unwrap().len(), 32768);
        assert_eq!(
            enumerate_labeled_graphs(8).err(),
            Some(EnumerationCapError { requested: 8 })
        );
        let masks: Vec<u64> = enumerate_labeled_graphs(3).unwrap().map(|g| g.edge_mask()).collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn equivalence_examples() {
        let c5 = Graph::cycle(5);
        let r = check_equivalence(&c5, 4);
        assert!(r.agree && !r.verdict_i && !r.verdict_ii && !r.verdict_iii);
        assert!(r.disagreement_witness.is_none());
        let r = check_equivalence(&c5, 5);
        assert!(r.agree && r.verdict_i && r.verdict_ii && r.verdict_iii);
        let r = check_equivalence(&Graph::complete(4), 3);
        assert!(r.agree && r.verdict_i);
    }

    #[test]
    fn sweep_small_corpora() {
        let empty = sweep(Vec::<Graph>::new(), &KSelection::Fixed(vec![3]));
        assert_eq!(empty, SweepSummary::default());

        let s = sweep(labeled_graphs_up_to(5).unwrap(), &KSelection::Fixed(vec![3]));
        assert_eq!(s.graphs, 1 + 1 + 2 + 8 + 64 + 1024);
        assert_eq!(s.checks, s.graphs);
        assert_eq!(s.disagreements(), 0);

        let s = sweep(labeled_graphs_up_to(4).unwrap(), &KSelection::UpToOrder);
        assert_eq!(s.per_k.iter().map(|t| t.k).collect::<Vec<_>>(), [3, 4]);
        assert_eq!(s.disagreements(), 0);
    }

    #[test]
    fn per_k_tally_matches_chordality() {
        let corpus: Vec<_> = enumerate_labeled_graphs(5).unwrap().collect();
        let s = sweep(corpus.iter().cloned(), &KSelection::Fixed(vec![3, 4, 5]));
        for t in &s.per_k {
            let expected = corpus.iter().filter(|g| chordality(g).value <= t.k).count();
            assert_eq!(t.holds_i, expected);
            assert_eq!(t.holds_ii, expected);
            assert_eq!(t.holds_iii, expected);
        }
    }

    #[test]
    fn hand_built_independence_witnesses() {
        let kite = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 3), (3, 2)]).unwrap();
        let w = IndependenceWitness {
            direction: IndependenceDirection::C2NotC1,
            graph: kite,
            vertex: 0,
            k: 3,
        };
        assert!(w.holds());
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (3, 2), (1, 4), (4, 5), (5, 2)]).unwrap();
        let w = IndependenceWitness {
            direction: IndependenceDirection::C1NotC2,
            graph: g,
            vertex: 0,
            k: 4,
        };
        assert!(w.holds());
    }

    #[test]
    fn witness_search_small_cap() {
        let found = find_independence_witnesses(3, &[3, 4, 5]).unwrap();
        assert!(found.c1_not_c2.is_none() || found.c2_not_c1.is_none());
        assert!(find_independence_witnesses(8, &[3]).is_err());
    }
}
