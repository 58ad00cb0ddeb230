//! Exhaustive census of planar underlying push cliques up to order 8, its
//! minimal members, and the checks built on top of it.

use alloc::vec::Vec;

use crate::canon::{canonical_graph, CanonicalCode};
use crate::decide::{common_neighbor_deficit, is_underlying_push_clique, Decision, CLASS_RANK_BUDGET};
use crate::enumerate::enumerate_graphs;
use crate::error::DecideError;
use crate::graph::{Diameter, Graph};
use crate::orient::{Orientation, PushClassReps};
use crate::planarity::{generate_triangulations, is_planar};

/// Largest order the census covers; no planar push clique is larger.
pub const CENSUS_MAX_ORDER: usize = 8;

/// One planar underlying push clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRecord {
    pub order: usize,
    /// Canonical representative.
    pub graph: Graph,
    /// No single-edge deletion is still an underlying push clique.
    pub minimal: bool,
    /// First push-clique orientation found by the class search.
    pub witness: Orientation,
    pub planar: bool,
    pub min_degree: usize,
    pub independence_number: usize,
    pub every_edge_hamiltonian: bool,
}

impl CensusRecord {
    /// Re-checks the record's invariants from scratch.
    pub fn is_consistent(&self) -> bool {
        self.witness.base() == &self.graph
            && self.witness.is_push_clique()
            && self.planar
            && self.order == self.graph.order()
            && self.minimal == is_edge_minimal(&self.graph).unwrap_or(!self.minimal)
    }
}

/// Census of every order `1..=n_max`; `orders[k]` holds order `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub orders: Vec<Vec<CensusRecord>>,
}

impl Census {
    pub fn records(&self) -> impl Iterator<Item = &CensusRecord> {
        self.orders.iter().flatten()
    }

    pub fn of_order(&self, n: usize) -> &[CensusRecord] {
        self.orders.get(n.wrapping_sub(1)).map_or(&[], Vec::as_slice)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.orders.iter().map(Vec::len).collect()
    }

    pub fn minimal_counts(&self) -> Vec<usize> {
        self.orders.iter().map(|o| o.iter().filter(|r| r.minimal).count()).collect()
    }
}

/// Whether deleting any single edge of `g` destroys the underlying
/// push-clique property. By edge monotonicity this is minimality under
/// spanning-subgraph inclusion.
pub fn is_edge_minimal(g: &Graph) -> Result<bool, DecideError> {
    for (u, v) in g.edges() {
        if is_underlying_push_clique(&g.without_edge(u, v))?.holds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The census record for `g` if it is a planar underlying push clique.
/// The record stores the canonical form of `g`.
pub fn census_entry(g: &Graph) -> Result<Option<CensusRecord>, DecideError> {
    let graph = canonical_graph(g);
    // Planarity first keeps the class search within budget: a planar graph on
    // at most 12 vertices has cycle rank at most 19.
    if common_neighbor_deficit(&graph, 2).is_some() || !is_planar(&graph) {
        return Ok(None);
    }
    let Decision { holds, witness, .. } = is_underlying_push_clique(&graph)?;
    if !holds {
        return Ok(None);
    }
    Ok(Some(CensusRecord {
        order: graph.order(),
        graph,
        minimal: is_edge_minimal(&graph)?,
        witness: witness.expect("a positive decision carries a witness"),
        planar: true,
        min_degree: graph.min_degree(),
        independence_number: graph.independence_number().0,
        every_edge_hamiltonian: graph.every_edge_on_hamiltonian_cycle(),
    }))
}

/// All isomorphism classes of planar underlying push cliques of each order
/// up to `n_max`, in ascending canonical-code order.
pub fn planar_upc_census(n_max: usize) -> Result<Census, DecideError> {
    check_census_order(n_max)?;
    let mut orders = Vec::new();
    for n in 1..=n_max {
        let mut records = Vec::new();
        for g in enumerate_graphs(n)? {
            if let Some(r) = census_entry(&g)? {
                records.push(r);
            }
        }
        orders.push(records);
    }
    Ok(Census { orders })
}

pub fn check_census_order(n_max: usize) -> Result<(), DecideError> {
    if !(1..=CENSUS_MAX_ORDER).contains(&n_max) {
        return Err(DecideError::OrderOutOfRange { order: n_max, min: 1, max: CENSUS_MAX_ORDER });
    }
    Ok(())
}

/// The records that are minimal, re-deciding minimality for each one.
pub fn minimal_filter<'a, I>(records: I) -> Result<Vec<CensusRecord>, DecideError>
where
    I: IntoIterator<Item = &'a CensusRecord>,
{
    let mut out = Vec::new();
    for r in records {
        if is_edge_minimal(&r.graph)? {
            let mut r = r.clone();
            r.minimal = true;
            out.push(r);
        }
    }
    Ok(out)
}

/// Why `g - e` is not an underlying push clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// A non-adjacent pair with fewer than two common neighbors.
    CommonNeighbors { pair: (usize, usize) },
    /// For each push-class representative, in enumeration order, a
    /// non-adjacent pair lying on no special 4-cycle.
    PerClass { pairs: Vec<(usize, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeRefutation {
    pub edge: (usize, usize),
    pub refutation: Refutation,
}

/// One refutation per edge, or `None` when `g` is not minimal.
pub fn minimality_certificate(g: &Graph) -> Result<Option<Vec<EdgeRefutation>>, DecideError> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v);
        let refutation = if let Some(pair) = common_neighbor_deficit(&h, 2) {
            Refutation::CommonNeighbors { pair }
        } else {
            let reps = PushClassReps::new(&h);
            if reps.rank() > CLASS_RANK_BUDGET {
                return Err(DecideError::ClassBudget { cycle_rank: reps.rank(), limit: CLASS_RANK_BUDGET });
            }
            let mut pairs = Vec::new();
            for d in reps {
                match d.push_clique_violation() {
                    Some(p) => pairs.push(p),
                    None => return Ok(None),
                }
            }
            Refutation::PerClass { pairs }
        };
        out.push(EdgeRefutation { edge: (u, v), refutation });
    }
    Ok(Some(out))
}

/// Re-verifies a stored refutation for `g - edge`.
pub fn verify_refutation(g: &Graph, r: &EdgeRefutation) -> bool {
    let (u, v) = r.edge;
    if !g.has_edge(u, v) {
        return false;
    }
    let h = g.without_edge(u, v);
    let bad_pair = |d: &Orientation, (a, b): (usize, usize)| {
        a != b && !h.has_edge(a, b) && (d.agreeing(a, b).is_empty() || d.disagreeing(a, b).is_empty())
    };
    match &r.refutation {
        Refutation::CommonNeighbors { pair: (a, b) } => {
            a != b && !h.has_edge(*a, *b) && h.neighbors(*a).intersection(h.neighbors(*b)).len() < 2
        }
        Refutation::PerClass { pairs } => {
            let reps = PushClassReps::new(&h);
            reps.class_count() == pairs.len() as u64 && reps.zip(pairs).all(|(d, &p)| bad_pair(&d, p))
        }
    }
}

/// The 9-vertex planar graph of diameter 2 and domination number 3. Vertex
/// 1 and vertex 3 are the labeled pair `a`, `b`.
pub fn exception_graph() -> Graph {
    Graph::build(
        9,
        &[
            (0, 1),
            (0, 7),
            (0, 3),
            (0, 2),
            (8, 1),
            (8, 7),
            (8, 5),
            (8, 6),
            (4, 5),
            (4, 3),
            (4, 6),
            (4, 2),
            (1, 2),
            (1, 5),
            (7, 6),
            (7, 3),
        ],
    )
    .expect("fixed edge list")
}

pub const GH_A: usize = 1;
pub const GH_B: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionReport {
    pub order: usize,
    pub size: usize,
    pub diameter: Diameter,
    pub domination_number: usize,
    pub planar: bool,
    pub underlying_push_clique: bool,
    /// Common neighbors of `a` and `b`.
    pub ab_common_neighbors: usize,
}

impl ExceptionReport {
    pub fn passed(&self) -> bool {
        self.order == 9
            && self.diameter == Diameter::Finite(2)
            && self.domination_number == 3
            && self.planar
            && !self.underlying_push_clique
            && self.ab_common_neighbors == 1
    }
}

pub fn check_exception_graph() -> Result<ExceptionReport, DecideError> {
    let g = exception_graph();
    Ok(ExceptionReport {
        order: g.order(),
        size: g.size(),
        diameter: g.diameter(),
        domination_number: g.domination_number().0,
        planar: is_planar(&g),
        underlying_push_clique: is_underlying_push_clique(&g)?.holds,
        ab_common_neighbors: g.neighbors(GH_A).intersection(g.neighbors(GH_B)).len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationCheck {
    pub graph: Graph,
    pub edges: usize,
    pub push_classes: u64,
    pub classes_checked: u64,
    pub underlying_push_clique: bool,
}

pub fn check_triangulation(g: &Graph) -> Result<TriangulationCheck, DecideError> {
    let d = is_underlying_push_clique(g)?;
    Ok(TriangulationCheck {
        graph: *g,
        edges: g.size(),
        push_classes: PushClassReps::new(g).class_count(),
        classes_checked: d.checked,
        underlying_push_clique: d.holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationSweep {
    pub triangulations: Vec<TriangulationCheck>,
}

impl TriangulationSweep {
    pub fn push_clique_count(&self) -> usize {
        self.triangulations.iter().filter(|t| t.underlying_push_clique).count()
    }

    /// No 9-vertex maximal planar graph is an underlying push clique. Every
    /// planar graph on 9 vertices is a spanning subgraph of one, so by edge
    /// monotonicity none is.
    pub fn passed(&self) -> bool {
        self.triangulations.len() == 50 && self.push_clique_count() == 0
    }
}

pub fn verify_theorem2_at_9() -> Result<TriangulationSweep, DecideError> {
    let triangulations = generate_triangulations(9)?.iter().map(check_triangulation).collect::<Result<Vec<_>, _>>()?;
    Ok(TriangulationSweep { triangulations })
}

/// Structural facts about the census.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObservationsReport {
    /// Minimal graphs of orders 6 and 7 with some edge on no Hamiltonian cycle.
    pub hamiltonian_failures: Vec<Graph>,
    pub hamiltonian_checked: usize,
    /// Classes of planar underlying push cliques of order at least 6 with
    /// minimum degree 2.
    pub min_degree_two: Vec<Graph>,
    /// The same restricted to minimal census graphs.
    pub min_degree_two_minimal: Vec<Graph>,
    /// Whether every class in `min_degree_two` contains the single minimal
    /// min-degree-2 class as a spanning subgraph.
    pub min_degree_two_share_core: bool,
    /// Census records containing no minimal graph of their own order.
    pub uncovered: Vec<Graph>,
    pub cover_checked: usize,
}

impl ObservationsReport {
    pub fn hamiltonian_holds(&self) -> bool {
        self.hamiltonian_failures.is_empty()
    }

    pub fn min_degree_two_holds(&self) -> bool {
        self.min_degree_two.len() == 1 && self.min_degree_two[0].order() == 6
    }

    pub fn cover_holds(&self) -> bool {
        self.uncovered.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.hamiltonian_holds() && self.min_degree_two_holds() && self.cover_holds()
    }
}

pub fn verify_structural_observations(census: &Census) -> ObservationsReport {
    let minimal: Vec<&CensusRecord> = census.records().filter(|r| r.minimal).collect();
    let ham: Vec<&&CensusRecord> = minimal.iter().filter(|r| (6..=7).contains(&r.order)).collect();
    let hamiltonian_failures =
        ham.iter().filter(|r| !r.graph.every_edge_on_hamiltonian_cycle()).map(|r| r.graph).collect();

    let min_degree_two: Vec<Graph> =
        census.records().filter(|r| r.order >= 6 && r.min_degree == 2).map(|r| r.graph).collect();
    let min_degree_two_minimal: Vec<Graph> =
        minimal.iter().filter(|r| r.order >= 6 && r.min_degree == 2).map(|r| r.graph).collect();
    let min_degree_two_share_core = match min_degree_two_minimal.as_slice() {
        [core] => min_degree_two.iter().all(|g| g.contains_spanning_subgraph(core)),
        _ => false,
    };

    let uncovered = census
        .records()
        .filter(|r| !minimal.iter().any(|m| m.order == r.order && r.graph.contains_spanning_subgraph(&m.graph)))
        .map(|r| r.graph)
        .collect();

    ObservationsReport {
        hamiltonian_failures,
        hamiltonian_checked: ham.len(),
        min_degree_two,
        min_degree_two_minimal,
        min_degree_two_share_core,
        uncovered,
        cover_checked: census.records().count(),
    }
}

/// Exhaustive check of the spanning-subgraph characterization: for every
/// planar graph of order `n` (`n <= exhaustive_max`), being an underlying
/// push clique is equivalent to containing a minimal census graph of order
/// `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub minimal_counts: Vec<usize>,
    pub planar_checked: usize,
    pub biconditional_failures: Vec<Graph>,
    pub census_checked: usize,
    pub uncovered: Vec<Graph>,
}

impl CharacterizationReport {
    pub fn total_minimal(&self) -> usize {
        self.minimal_counts.iter().sum()
    }

    pub fn characterization_holds(&self) -> bool {
        self.biconditional_failures.is_empty() && self.uncovered.is_empty()
    }
}

pub fn verify_spanning_characterization(
    census: &Census,
    exhaustive_max: usize,
) -> Result<CharacterizationReport, DecideError> {
    let minimal_by_order =
        |n: usize| -> Vec<Graph> { census.of_order(n).iter().filter(|r| r.minimal).map(|r| r.graph).collect() };
    let mut planar_checked = 0;
    let mut biconditional_failures = Vec::new();
    for n in 1..=exhaustive_max.min(census.orders.len()) {
        let mins = minimal_by_order(n);
        for g in enumerate_graphs(n)? {
            if !is_planar(&g) {
                continue;
            }
            planar_checked += 1;
            let upc = is_underlying_push_clique(&g)?.holds;
            let covered = mins.iter().any(|m| g.contains_spanning_subgraph(m));
            if upc != covered {
                biconditional_failures.push(g);
            }
        }
    }
    let mut census_checked = 0;
    let mut uncovered = Vec::new();
    for n in exhaustive_max + 1..=census.orders.len() {
        let mins = minimal_by_order(n);
        for r in census.of_order(n) {
            census_checked += 1;
            if !mins.iter().any(|m| r.graph.contains_spanning_subgraph(m)) {
                uncovered.push(r.graph);
            }
        }
    }
    Ok(CharacterizationReport {
        minimal_counts: census.minimal_counts(),
        planar_checked,
        biconditional_failures,
        census_checked,
        uncovered,
    })
}

/// Every non-complete underlying push clique of order at most `n_max`
/// contains a 4-cycle. Returns the counterexamples and the number of
/// underlying push cliques examined.
pub fn verify_four_cycle_property(n_max: usize) -> Result<(usize, Vec<Graph>), DecideError> {
    let mut seen = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        for g in enumerate_graphs(n)? {
            if g.is_complete() || !is_underlying_push_clique(&g)?.holds {
                continue;
            }
            seen += 1;
            if !g.has_4cycle() {
                bad.push(g);
            }
        }
    }
    Ok((seen, bad))
}

/// Sort key used for every census listing.
pub fn record_key(r: &CensusRecord) -> CanonicalCode {
    CanonicalCode::of(&r.graph)
}
