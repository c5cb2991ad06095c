//! Parallel verification sweeps.
//!
//! Graphs are generated by index inside the worker pool and reports are
//! merged in index order, so results do not depend on scheduling.

use kchordal_core::graph::pair_count;
use kchordal_core::oracle::{
    check_equivalence, random_graph, EnumerationCapError, EquivalenceReport, KSelection, SweepSummary,
    MAX_ENUMERATION_ORDER,
};
use kchordal_core::Graph;
use rayon::prelude::*;

const BLOCK: u64 = 1 << 14;

/// A reproducible, indexable stream of graphs.
#[derive(Debug, Clone, PartialEq)]
pub enum Corpus {
    /// Every labeled graph of order `0..=max_n`, by order then edge mask.
    Exhaustive { max_n: usize },
    /// Exactly order `n`, all labeled graphs.
    Order { n: usize },
    /// `G(n, p)` samples; sample `i` uses seed `seed + i` (wrapping).
    Random { n: usize, p: f64, count: u64, seed: u64 },
}

impl Corpus {
    fn check(&self) -> Result<(), EnumerationCapError> {
        match *self {
            Corpus::Exhaustive { max_n: n } | Corpus::Order { n } if n > MAX_ENUMERATION_ORDER => {
                Err(EnumerationCapError { requested: n })
            }
            _ => Ok(()),
        }
    }

    fn orders(&self) -> std::ops::RangeInclusive<usize> {
        match *self {
            Corpus::Exhaustive { max_n } => 0..=max_n,
            Corpus::Order { n } => n..=n,
            Corpus::Random { n, .. } => n..=n,
        }
    }

    pub fn len(&self) -> u64 {
        match *self {
            Corpus::Random { count, .. } => count,
            _ => self.orders().map(|n| 1u64 << pair_count(n)).sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn graph(&self, index: u64) -> Graph {
        match *self {
            Corpus::Random { n, p, seed, .. } => random_graph(n, p, seed.wrapping_add(index)),
            _ => {
                let mut rest = index;
                for n in self.orders() {
                    let size = 1u64 << pair_count(n);
                    if rest < size {
                        return Graph::from_edge_mask(n, rest);
                    }
                    rest -= size;
                }
                panic!("corpus index {index} out of range")
            }
        }
    }
}

/// Checks every graph of `corpus` for every selected `k` on the rayon pool.
pub fn par_sweep(corpus: &Corpus, ks: &KSelection) -> Result<SweepSummary, EnumerationCapError> {
    corpus.check()?;
    let mut summary = SweepSummary::default();
    let total = corpus.len();
    let mut start = 0;
    while start < total {
        let end = (start + BLOCK).min(total);
        let block: Vec<Vec<EquivalenceReport>> = (start..end)
            .into_par_iter()
            .map(|i| {
                let g = corpus.graph(i);
                ks.for_order(g.n())
                    .into_iter()
                    .map(|k| check_equivalence(&g, k))
                    .collect()
            })
            .collect();
        for reports in block {
            summary.absorb_graph(reports);
        }
        start = end;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use kchordal_core::oracle::{labeled_graphs_up_to, sweep};

    #[test]
    fn exhaustive_indexing_matches_sequential_enumeration() {
        let corpus = Corpus::Exhaustive { max_n: 4 };
        let seq: Vec<Graph> = labeled_graphs_up_to(4).unwrap().collect();
        assert_eq!(corpus.len(), seq.len() as u64);
        for (i, g) in seq.iter().enumerate() {
            assert_eq!(&corpus.graph(i as u64), g);
        }
    }

    #[test]
    fn parallel_equals_sequential() {
        let ks = KSelection::Fixed(vec![3, 4, 5]);
        let par = par_sweep(&Corpus::Exhaustive { max_n: 5 }, &ks).unwrap();
        let seq = sweep(labeled_graphs_up_to(5).unwrap(), &ks);
        assert_eq!(par, seq);

        let corpus = Corpus::Random {
            n: 9,
            p: 0.4,
            count: 40,
            seed: 11,
        };
        let seq = sweep((0..40).map(|i| random_graph(9, 0.4, 11 + i)), &KSelection::UpToOrder);
        assert_eq!(par_sweep(&corpus, &KSelection::UpToOrder).unwrap(), seq);
    }

    #[test]
    fn cap_is_enforced() {
        let err = par_sweep(&Corpus::Exhaustive { max_n: 8 }, &KSelection::UpToOrder).unwrap_err();
        assert_eq!(err.requested, 8);
    }
}
