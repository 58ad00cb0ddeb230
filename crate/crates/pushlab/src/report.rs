//! Golden census lines and serializable summaries.

use pushlab_core::census::{Census, CensusRecord, CharacterizationReport, TriangulationSweep};
use serde::Serialize;

use crate::format::{write_digraph6, write_graph6};

/// `order \t graph6 \t minimal(0/1) \t witness digraph6`.
pub fn golden_line(r: &CensusRecord) -> String {
    format!("{}\t{}\t{}\t{}", r.order, write_graph6(&r.graph), r.minimal as u8, write_digraph6(&r.witness))
}

/// Golden file body: one newline-terminated line per record.
pub fn golden_text<'a>(records: impl IntoIterator<Item = &'a CensusRecord>) -> String {
    records.into_iter().map(|r| golden_line(r) + "\n").collect()
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RecordJson {
    pub order: usize,
    pub graph6: String,
    pub minimal: bool,
    pub witness: String,
    pub edges: usize,
    pub min_degree: usize,
    pub independence_number: usize,
    pub every_edge_hamiltonian: bool,
}

impl From<&CensusRecord> for RecordJson {
    fn from(r: &CensusRecord) -> Self {
        RecordJson {
            order: r.order,
            graph6: write_graph6(&r.graph),
            minimal: r.minimal,
            witness: write_digraph6(&r.witness),
            edges: r.graph.size(),
            min_degree: r.min_degree,
            independence_number: r.independence_number,
            every_edge_hamiltonian: r.every_edge_hamiltonian,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusSummary {
    pub max_order: usize,
    pub counts: Vec<usize>,
    pub minimal_counts: Vec<usize>,
    pub total: usize,
    pub minimal_total: usize,
    /// Present only for a full census: order 8 is non-empty and no
    /// 9-vertex triangulation is an underlying push clique.
    pub theorem2: Option<bool>,
    /// Present only for a full census: the spanning-subgraph
    /// characterization holds and there are exactly 18 minimal graphs.
    pub theorem3: Option<bool>,
    pub records: Vec<RecordJson>,
}

/// Minimal-graph total the characterization claims.
pub const CLAIMED_MINIMAL_TOTAL: usize = 18;

pub fn nine_vertex_pass(census: &Census, t2: &TriangulationSweep) -> bool {
    !census.of_order(8).is_empty() && t2.passed()
}

pub fn characterization_pass(t3: &CharacterizationReport) -> bool {
    t3.characterization_holds() && t3.total_minimal() == CLAIMED_MINIMAL_TOTAL
}

pub fn census_summary(
    census: &Census,
    minimal_only: bool,
    theorems: Option<(&TriangulationSweep, &CharacterizationReport)>,
) -> CensusSummary {
    CensusSummary {
        max_order: census.orders.len(),
        counts: census.counts(),
        minimal_counts: census.minimal_counts(),
        total: census.counts().iter().sum(),
        minimal_total: census.minimal_counts().iter().sum(),
        theorem2: theorems.map(|(t2, _)| nine_vertex_pass(census, t2)),
        theorem3: theorems.map(|(_, t3)| characterization_pass(t3)),
        records: census.records().filter(|r| !minimal_only || r.minimal).map(RecordJson::from).collect(),
    }
}
