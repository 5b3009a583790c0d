//! Rayon drivers for the core scans. Work is split into fixed chunks that
//! do not depend on the worker count, and partial results are joined in
//! chunk order, so every driver returns the same value for any number of
//! workers.

use balance_core::claims::{ClaimRun, TrialOutcome};
use balance_core::extremal::{ex_exact_with, extensions, ExResult, FamilySpec, IsoSet};
use balance_core::oracle::{
    bal_finish, bal_scan, bal_space, lbal_finish, lbal_scan, lbal_space, OraclePartial, OracleResult,
};
use balance_core::search::{scan_cliques_from, BalancedSearch, CliqueScan};
use balance_core::{BalancedWitness, ListColoring, SmallGraph};
use rayon::prelude::*;

pub const WORKERS_ENV: &str = "BALANCE_LAB_WORKERS";

/// `BALANCE_LAB_WORKERS` if set to a positive integer, else the number of
/// available cores.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Runs `f` on a dedicated pool with `workers` threads.
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

fn scan_chunks<F>(space: u64, chunk: u64, scan: F) -> balance_core::Result<OraclePartial>
where
    F: Fn(std::ops::Range<u64>) -> balance_core::Result<OraclePartial> + Sync,
{
    let starts: Vec<u64> = (0..space).step_by(chunk as usize).collect();
    let parts = starts
        .into_par_iter()
        .map(|s| scan(s..(s + chunk).min(space)))
        .collect::<balance_core::Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(OraclePartial::default(), OraclePartial::merge))
}

/// `bal_exact` with the masks split by their top 8 bits.
pub fn bal_exact(n: usize, g: &SmallGraph) -> balance_core::Result<OracleResult> {
    let space = bal_space(n)?;
    let chunk = (space >> 8).max(1);
    bal_finish(n, scan_chunks(space, chunk, |r| bal_scan(n, g, r))?)
}

/// `lbal_exact` with the codes split by their top 5 base-3 digits.
pub fn lbal_exact(n: usize, g: &SmallGraph) -> balance_core::Result<OracleResult> {
    let space = lbal_space(n)?;
    let chunk = (space / 243).max(1);
    lbal_finish(n, scan_chunks(space, chunk, |r| lbal_scan(n, g, r))?)
}

/// Level step for `ex_exact_with`: extensions computed in parallel, then
/// deduplicated in level order.
pub fn next_level(level: &[SmallGraph], f: &FamilySpec) -> Vec<SmallGraph> {
    let ext: Vec<Vec<SmallGraph>> = level.par_iter().map(|g| extensions(g, f)).collect();
    let mut set = IsoSet::default();
    for g in ext.into_iter().flatten() {
        set.insert(g);
    }
    set.into_vec()
}

pub fn ex_exact(n: usize, f: &FamilySpec) -> balance_core::Result<ExResult> {
    ex_exact_with(n, f, next_level)
}

/// Balanced copy searched root by root in parallel. With `deterministic`
/// the witness is the one from the lowest root (the sequential answer);
/// otherwise whichever root finishes first wins.
pub fn find_balanced_copy(c: &ListColoring, g: &SmallGraph, deterministic: bool) -> Option<BalancedWitness> {
    let search = BalancedSearch::new(c, g);
    if g.vertex_count() == 0 {
        return search.find();
    }
    let roots = search.roots().into_par_iter();
    if deterministic {
        roots.find_map_first(|r| search.find_rooted(r))
    } else {
        roots.find_map_any(|r| search.find_rooted(r))
    }
}

/// Every `m`-set scanned for a balanced `K_m`, split by smallest vertex.
/// The result matches the sequential scan exactly.
pub fn scan_cliques(c: &ListColoring, m: usize) -> CliqueScan {
    let parts: Vec<CliqueScan> = (0..c.vertex_count())
        .into_par_iter()
        .map(|first| scan_cliques_from(c, m, first))
        .collect();
    let mut total = CliqueScan {
        witness: None,
        sets_examined: 0,
    };
    for s in parts {
        total.sets_examined += s.sets_examined;
        if s.witness.is_some() {
            total.witness = s.witness;
            break;
        }
    }
    total
}

/// Trials `0..trials` in index order.
pub fn run_trials(run: &ClaimRun, root: u64, trials: u64) -> balance_core::Result<Vec<TrialOutcome>> {
    (0..trials).into_par_iter().map(|i| run.trial(root, i)).collect()
}
