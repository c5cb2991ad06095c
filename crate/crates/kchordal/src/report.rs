//! JSON shapes emitted by the command-line tool, one object per line.
//!
//! Graphs at the top level of a report are graph6 strings; vertex sets are
//! sorted arrays and paths or cycles are vertex arrays. Schemas live in
//! `docs/schemas/`.

use kchordal_core::oracle::{
    EquivalenceReport, Evidence, IndependenceDirection, IndependenceWitness, KTally, SweepSummary,
};
use kchordal_core::separators::{SeparatorRecord, SeparatorViolation};
use kchordal_core::simplicial::{check_c1, check_c2, FailureWitness, OrderingCertificate, RejectedStep};
use kchordal_core::InducedCycle;
use serde::Serialize;

use crate::formats::encode_graph6;

#[derive(Debug, Serialize)]
pub struct ChordalityReport {
    pub graph: String,
    pub chordality: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<InducedCycle>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub graph: String,
    pub k: usize,
    pub k_chordal: bool,
    /// An induced cycle longer than `k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<InducedCycle>,
}

#[derive(Debug, Serialize)]
pub struct OrderingReport {
    pub graph: String,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<OrderingCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<FailureWitness>,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub graph: String,
    pub k: usize,
    pub order: Vec<usize>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rejected: Option<RejectedStep>,
}

#[derive(Debug, Serialize)]
pub struct SeparatorsReport {
    pub graph: String,
    pub k: usize,
    pub separators: Vec<SeparatorRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<SeparatorViolation>,
    /// The induced cycle formed by the violating paths.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<InducedCycle>,
}

#[derive(Debug, Serialize)]
pub struct EquivalenceLine {
    pub graph: String,
    pub k: usize,
    pub verdict_i: bool,
    pub verdict_ii: bool,
    pub verdict_iii: bool,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disagreement_witness: Option<Evidence>,
}

impl From<&EquivalenceReport> for EquivalenceLine {
    fn from(r: &EquivalenceReport) -> Self {
        EquivalenceLine {
            graph: encode_graph6(&r.graph),
            k: r.k,
            verdict_i: r.verdict_i,
            verdict_ii: r.verdict_ii,
            verdict_iii: r.verdict_iii,
            agree: r.agree,
            disagreement_witness: r.disagreement_witness.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SummaryBody {
    pub graphs: usize,
    pub checks: usize,
    pub disagreements: usize,
    pub per_k: Vec<KTally>,
}

#[derive(Debug, Serialize)]
pub struct SummaryLine {
    pub summary: SummaryBody,
}

impl From<&SweepSummary> for SummaryLine {
    fn from(s: &SweepSummary) -> Self {
        SummaryLine {
            summary: SummaryBody {
                graphs: s.graphs,
                checks: s.checks,
                disagreements: s.disagreements(),
                per_k: s.per_k.clone(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessLine {
    pub direction: IndependenceDirection,
    pub graph: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub vertex: usize,
    pub k: usize,
    pub c1: bool,
    pub c2: bool,
}

impl From<&IndependenceWitness> for WitnessLine {
    fn from(w: &IndependenceWitness) -> Self {
        WitnessLine {
            direction: w.direction,
            graph: encode_graph6(&w.graph),
            n: w.graph.n(),
            edges: w.graph.edges().collect(),
            vertex: w.vertex,
            k: w.k,
            c1: check_c1(&w.graph, w.vertex, w.k),
            c2: check_c2(&w.graph, w.vertex, w.k),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WitnessReport {
    pub max_n: usize,
    pub ks: Vec<usize>,
    pub c1_not_c2: Option<WitnessLine>,
    pub c2_not_c1: Option<WitnessLine>,
}

/// Compact single-line JSON.
pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}
