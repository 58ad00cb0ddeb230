//! Exhaustive sweeps sharded over a rayon pool. Every driver collects results
//! in input order, so output does not depend on the worker count.

use std::collections::HashMap;

use pushlab_core::census::{census_entry, check_census_order, Census, CensusRecord};
use pushlab_core::decide::is_underlying_oriented_clique;
use pushlab_core::orient::all_orientations;
use pushlab_core::{
    enumerate_graphs, is_outerplanar, is_push_clique_bruteforce, oriented_chromatic_number, pushable_chromatic_number,
    DecideError, Graph, OrientError, PushClassReps,
};
use rayon::prelude::*;
use rayon::ThreadPool;

pub const THREADS_ENV: &str = "PUSHLAB_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum PoolError {
    #[error("{THREADS_ENV}={0:?} is not a positive integer")]
    BadEnv(String),
    #[error(transparent)]
    Build(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Decide(#[from] DecideError),
    #[error(transparent)]
    Orient(#[from] OrientError),
}

/// Worker count from the flag, else `PUSHLAB_THREADS`, else rayon's default.
pub fn resolve_threads(flag: Option<usize>) -> Result<Option<usize>, PoolError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(PoolError::BadEnv(v)),
        },
        Err(_) => Ok(None),
    }
}

pub fn build_pool(threads: Option<usize>) -> Result<ThreadPool, PoolError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

/// Census of orders `1..=n_max`, one order at a time with graphs sharded.
pub fn census(pool: &ThreadPool, n_max: usize) -> Result<Census, DecideError> {
    check_census_order(n_max)?;
    let mut orders = Vec::new();
    for n in 1..=n_max {
        let graphs = enumerate_graphs(n)?;
        let records: Vec<Option<CensusRecord>> =
            pool.install(|| graphs.par_iter().map(census_entry).collect::<Result<_, _>>())?;
        orders.push(records.into_iter().flatten().collect());
    }
    Ok(Census { orders })
}

/// Outcome of a sweep over isomorphism classes and their orientations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub classes: usize,
    pub orientations: u64,
    pub positives: u64,
    /// `(graph, edge mask)` of every disagreement.
    pub mismatches: Vec<(Graph, u128)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.classes += other.classes;
        self.orientations += other.orientations;
        self.positives += other.positives;
        self.mismatches.extend(other.mismatches);
        self
    }
}

fn sweep<F>(pool: &ThreadPool, n_max: usize, per_graph: F) -> Result<SweepReport, SweepError>
where
    F: Fn(&Graph) -> Result<SweepReport, OrientError> + Sync,
{
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        graphs.extend(enumerate_graphs(n)?);
    }
    let parts: Vec<SweepReport> = pool.install(|| {
        graphs.par_iter().map(|g| per_graph(g).map(|r| SweepReport { classes: 1, ..r })).collect::<Result<_, _>>()
    })?;
    Ok(parts.into_iter().fold(SweepReport::default(), SweepReport::merge))
}

fn per_orientation<P>(g: &Graph, mut agree: P) -> Result<SweepReport, OrientError>
where
    P: FnMut(&pushlab_core::Orientation) -> Result<(bool, bool), OrientError>,
{
    let mut r = SweepReport::default();
    for d in all_orientations(g) {
        r.orientations += 1;
        let (positive, consistent) = agree(&d)?;
        r.positives += positive as u64;
        if !consistent {
            r.mismatches.push((*g, d.edge_mask()));
        }
    }
    Ok(r)
}

/// Pairwise agree/disagree test against the all-pushes brute force, over
/// every orientation of every class of order at most `n_max`.
pub fn characterization_sweep(pool: &ThreadPool, n_max: usize) -> Result<SweepReport, SweepError> {
    sweep(pool, n_max, |g| {
        per_orientation(g, |d| {
            let fast = d.is_push_clique();
            Ok((fast, fast == is_push_clique_bruteforce(d)?))
        })
    })
}

/// Clique predicates against exact chromatic numbers. Positives count push
/// cliques.
pub fn chromatic_sweep(pool: &ThreadPool, n_max: usize) -> Result<SweepReport, SweepError> {
    sweep(pool, n_max, |g| {
        let n = g.order();
        per_orientation(g, |d| {
            let push = d.is_push_clique();
            let oriented = d.is_oriented_clique();
            let ok = push == (pushable_chromatic_number(d)?.value == n)
                && oriented == (oriented_chromatic_number(d)?.size == n);
            Ok((push, ok))
        })
    })
}

/// Push classes of every class of order at most `n_max`: the representative
/// count is `2^(m - n + c)`, every orientation maps to exactly one
/// representative, every class has `2^(n - c)` members, and distinct
/// representatives are not push-related. Positives count classes.
pub fn push_class_sweep(pool: &ThreadPool, n_max: usize) -> Result<SweepReport, SweepError> {
    sweep(pool, n_max, |g| {
        let reps = PushClassReps::new(g);
        let (n, m, c) = (g.order(), g.size(), g.component_count());
        let mut r = SweepReport { positives: reps.class_count(), ..SweepReport::default() };
        let list: Vec<_> = reps.clone().collect();
        let mut ok = reps.class_count() == 1 << (m + c - n) && list.len() as u64 == reps.class_count();
        let index: HashMap<u128, usize> = list.iter().enumerate().map(|(i, d)| (d.edge_mask(), i)).collect();
        let mut sizes = vec![0u64; list.len()];
        for d in all_orientations(g) {
            r.orientations += 1;
            let rep = reps.canonical_rep(&d);
            match index.get(&rep.edge_mask()) {
                Some(&i) if pushlab_core::push_related(&d, &rep)? => sizes[i] += 1,
                _ => ok = false,
            }
        }
        ok &= sizes.iter().all(|&s| s == 1 << (n - c));
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                ok &= !pushlab_core::push_related(a, b)?;
            }
        }
        if !ok {
            r.mismatches.push((*g, 0));
        }
        Ok(r)
    })
}

/// Order-8 outerplanar classes and any that are underlying oriented
/// cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterplanarReport {
    pub order: usize,
    pub classes: usize,
    pub outerplanar: usize,
    pub oriented_cliques: Vec<Graph>,
}

impl OuterplanarReport {
    pub fn passed(&self) -> bool {
        self.oriented_cliques.is_empty()
    }
}

pub fn outerplanar_sweep(pool: &ThreadPool, n: usize) -> Result<OuterplanarReport, DecideError> {
    let graphs = enumerate_graphs(n)?;
    let verdicts: Vec<Option<bool>> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                if !is_outerplanar(g)? {
                    return Ok(None);
                }
                Ok(Some(is_underlying_oriented_clique(g)?.holds))
            })
            .collect::<Result<_, DecideError>>()
    })?;
    Ok(OuterplanarReport {
        order: n,
        classes: graphs.len(),
        outerplanar: verdicts.iter().flatten().count(),
        oriented_cliques: graphs.iter().zip(&verdicts).filter(|(_, v)| **v == Some(true)).map(|(g, _)| *g).collect(),
    })
}
