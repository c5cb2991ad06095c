use kchordal_core::oracle::{check_equivalence, labeled_graphs_up_to, random_graph, sweep, KSelection};
use kchordal_core::separators::{enumerate_minimal_separators, find_separator_violation};
use kchordal_core::simplicial::{k_simplicial_ordering, verify_ordering, EliminationOutcome};
use kchordal_core::{chordality, is_k_chordal, Graph, VertexSet};

fn wheel(rim: usize) -> Graph {
    let hub = rim;
    let edges = (0..rim).flat_map(|i| [(i, (i + 1) % rim), (i, hub)]);
    Graph::from_edges(rim + 1, edges).unwrap()
}

#[test]
fn wheel_chordality_is_its_rim() {
    for rim in 4..=9 {
        let g = wheel(rim);
        assert_eq!(chordality(&g).value, rim);
        for k in 3..=rim + 1 {
            let r = check_equivalence(&g, k);
            assert!(r.agree);
            assert_eq!(r.verdict_i, k >= rim);
        }
    }
}

#[test]
fn certificates_verify_and_failures_explain() {
    for seed in 0..200 {
        let g = random_graph(9, 0.35, seed);
        let c = chordality(&g).value.max(3);
        for k in 3..=9 {
            match k_simplicial_ordering(&g, k) {
                EliminationOutcome::Certificate(cert) => {
                    assert!(k >= c);
                    assert_eq!(verify_ordering(&g, &cert.order, k), Ok(()));
                }
                EliminationOutcome::Stuck(f) => {
                    assert!(k < c);
                    assert!(f.verdicts.iter().all(|v| !v.is_k_simplicial()));
                    // The residual graph still holds a long induced cycle.
                    let rest = g.induced_subgraph(&f.residual).graph;
                    assert!(!is_k_chordal(&rest, k));
                }
            }
        }
    }
}

#[test]
fn separator_violations_are_long_induced_cycles() {
    for seed in 0..300 {
        let g = random_graph(8, 0.4, seed);
        for k in 3..=7 {
            if let Some(v) = find_separator_violation(&g, k) {
                let cycle = v.cycle();
                assert!(cycle.is_induced_in(&g));
                assert_eq!(cycle.len(), v.total_length());
                assert!(cycle.len() > k);
            } else {
                assert!(is_k_chordal(&g, k));
            }
        }
    }
}

#[test]
fn disconnected_graphs_split_cleanly() {
    let g = Graph::from_edges(
        9,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 8), (8, 4)],
    )
    .unwrap();
    assert_eq!(chordality(&g).value, 5);
    assert!(check_equivalence(&g, 4).agree);
    let separators: Vec<VertexSet> = enumerate_minimal_separators(&g).map(|r| r.separator).collect();
    assert!(separators.iter().all(|s| !s.is_empty() && s.len() == 2));
    assert_eq!(separators.len(), 2 + 5);
}

#[test]
fn small_sweep_has_no_disagreements() {
    let summary = sweep(labeled_graphs_up_to(5).unwrap(), &KSelection::UpToOrder);
    assert_eq!(summary.graphs, 1 + 1 + 2 + 8 + 64 + 1024);
    assert_eq!(summary.disagreements(), 0);
}
