//! Half-edge families, exact Turán numbers at small order, and a
//! girth-6 graph generator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{contains, contains_using_edge, invariant_hash, is_isomorphic, Bits, NamedGraph, SmallGraph};

/// Largest order accepted by [`ex_exact`].
pub const EX_CAP: usize = 12;

/// A finite set of pairwise non-isomorphic graphs, each with an edge.
#[derive(Clone, Debug, Default)]
pub struct FamilySpec {
    members: Vec<SmallGraph>,
}

impl FamilySpec {
    /// Builds a family, dropping isomorphic repeats (first occurrence wins).
    pub fn new(graphs: impl IntoIterator<Item = SmallGraph>) -> Result<Self> {
        let mut f = FamilySpec::default();
        for g in graphs {
            if g.edge_count() == 0 {
                return Err(Error::InvalidParameter("family members need at least one edge".into()));
            }
            f.insert(g);
        }
        Ok(f)
    }

    fn insert(&mut self, g: SmallGraph) -> bool {
        if self.members.iter().any(|m| is_isomorphic(m, &g)) {
            return false;
        }
        self.members.push(g);
        true
    }

    /// `{C3, C4, C5}`: forbidding it is the same as asking for girth at least 6.
    pub fn short_cycles() -> Self {
        let cycles = (3..=5).map(|m| NamedGraph::Cycle(m).build().expect("valid cycle"));
        FamilySpec::new(cycles).expect("cycles have edges")
    }

    pub fn members(&self) -> &[SmallGraph] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the member isomorphic to `g`, if any.
    pub fn position(&self, g: &SmallGraph) -> Option<usize> {
        self.members.iter().position(|m| is_isomorphic(m, g))
    }

    /// True when `host` contains some member as a subgraph.
    pub fn is_contained_in(&self, host: &SmallGraph) -> bool {
        self.members.iter().any(|m| contains(host, m))
    }

    fn has_copy_using(&self, host: &SmallGraph, u: usize, v: usize) -> bool {
        self.members.iter().any(|m| contains_using_edge(host, m, u, v))
    }
}

/// All subgraphs of `g` with `⌊e(g)/2⌋` edges and no isolated vertices, up
/// to isomorphism, in order of first appearance over lexicographic edge
/// subsets.
pub fn half_family(g: &SmallGraph) -> Result<FamilySpec> {
    let edges = g.edge_list();
    let e = edges.len();
    if e < 2 {
        return Err(Error::InvalidParameter(format!(
            "half family needs at least 2 edges, got {e}"
        )));
    }
    if e > 40 {
        return Err(Error::InvalidParameter(format!(
            "half family limited to 40 edges, got {e}"
        )));
    }
    let half = e / 2;
    let mut family = FamilySpec::default();
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut chosen = Vec::with_capacity(half);
    // Lexicographic walk over index combinations.
    let mut idx: Vec<usize> = (0..half).collect();
    loop {
        chosen.clear();
        chosen.extend(idx.iter().map(|&i| edges[i]));
        let h = SmallGraph::edge_induced(g.vertex_count(), &chosen)?;
        let key = invariant_hash(&h);
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|&i| is_isomorphic(&family.members[i], &h)) {
            bucket.push(family.members.len());
            family.members.push(h);
        }
        let Some(pos) = (0..half).rev().find(|&i| idx[i] < e - half + i) else {
            return Ok(family);
        };
        idx[pos] += 1;
        for j in pos + 1..half {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// One linear forest per integer partition of `total` (parts in
/// non-increasing order, partitions in reverse lexicographic order).
pub fn linear_forest_family(total: usize) -> Result<FamilySpec> {
    if total == 0 {
        return Err(Error::InvalidParameter("linear forest family needs total >= 1".into()));
    }
    let mut out = Vec::new();
    partitions(total, total, &mut Vec::new(), &mut out);
    let graphs = out
        .into_iter()
        .map(|parts| NamedGraph::LinearForest(parts).build())
        .collect::<Result<Vec<_>>>()?;
    FamilySpec::new(graphs)
}

fn partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Result of an exact Turán computation.
#[derive(Clone, Debug)]
pub struct ExResult {
    pub value: usize,
    /// One graph attaining the maximum.
    pub extremal: SmallGraph,
    /// Number of non-isomorphic family-free graphs met at each edge count.
    pub level_sizes: Vec<usize>,
}

/// Isomorphism-free collection of same-size graphs.
#[derive(Default)]
pub struct IsoSet {
    buckets: BTreeMap<u64, Vec<usize>>,
    graphs: Vec<SmallGraph>,
}

impl IsoSet {
    pub fn insert(&mut self, g: SmallGraph) -> bool {
        let bucket = self.buckets.entry(invariant_hash(&g)).or_default();
        if bucket.iter().any(|&i| is_isomorphic(&self.graphs[i], &g)) {
            return false;
        }
        bucket.push(self.graphs.len());
        self.graphs.push(g);
        true
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn into_vec(self) -> Vec<SmallGraph> {
        self.graphs
    }
}

/// All family-free one-edge extensions of `g` (isomorphic repeats included).
/// Since family-freeness survives edge deletion, every family-free graph
/// with `e + 1` edges arises this way from one with `e` edges.
pub fn extensions(g: &SmallGraph, f: &FamilySpec) -> Vec<SmallGraph> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, v).expect("valid pair");
            if !f.has_copy_using(&h, u, v) {
                out.push(h);
            }
        }
    }
    out
}

/// Deduplicates the extensions of a whole level.
pub fn next_level(level: &[SmallGraph], f: &FamilySpec) -> Vec<SmallGraph> {
    let mut set = IsoSet::default();
    for g in level {
        for h in extensions(g, f) {
            set.insert(h);
        }
    }
    set.into_vec()
}

pub fn check_ex_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    if n > EX_CAP {
        return Err(Error::TooManyVertices { n, cap: EX_CAP });
    }
    Ok(())
}

/// `ex(n, f)`: the most edges of an `n`-vertex graph with no member of `f`
/// as a subgraph. Generates family-free graphs level by level in the edge
/// count, keeping one graph per isomorphism class; `n` is capped at
/// [`EX_CAP`].
pub fn ex_exact(n: usize, f: &FamilySpec) -> Result<ExResult> {
    ex_exact_with(n, f, next_level)
}

/// [`ex_exact`] with a caller-supplied level step (used by parallel drivers).
pub fn ex_exact_with<S>(n: usize, f: &FamilySpec, mut step: S) -> Result<ExResult>
where
    S: FnMut(&[SmallGraph], &FamilySpec) -> Vec<SmallGraph>,
{
    check_ex_order(n)?;
    let mut level = vec![SmallGraph::empty(n)?];
    let mut sizes = vec![1];
    loop {
        let next = step(&level, f);
        if next.is_empty() {
            let extremal = level.swap_remove(0);
            return Ok(ExResult {
                value: extremal.edge_count(),
                extremal,
                level_sizes: sizes,
            });
        }
        sizes.push(next.len());
        level = next;
    }
}

/// No path of length at most 4 joins `u` and `v`, so adding `uv` keeps girth >= 6.
fn far_apart(g: &SmallGraph, u: usize, v: usize) -> bool {
    let mut reach = 1u64 << u;
    for _ in 0..4 {
        let mut next = reach;
        for w in Bits(reach) {
            next |= g.row(w);
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    reach >> v & 1 == 0
}

/// Restart and repair budget of the girth-6 generator.
#[derive(Clone, Copy, Debug)]
pub struct GeneratorBudget {
    pub restarts: usize,
    /// Remove-one-add-two attempts per restart.
    pub repairs: usize,
}

impl Default for GeneratorBudget {
    fn default() -> Self {
        GeneratorBudget {
            restarts: 32,
            repairs: 2000,
        }
    }
}

/// Heuristic: greedy insertion in random order, then local repair that
/// swaps one edge out for two. Returns the graph with the most edges seen
/// (stopping early once `target` edges are reached). Girth is always >= 6.
pub fn girth6_best(k: usize, target: usize, seed: u64, budget: GeneratorBudget) -> Result<SmallGraph> {
    let mut best = SmallGraph::empty(k)?;
    if k < 2 {
        return Ok(best);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    for _ in 0..budget.restarts.max(1) {
        let mut g = SmallGraph::empty(k)?;
        pairs.shuffle(&mut rng);
        greedy_fill(&mut g, &pairs);
        for _ in 0..budget.repairs {
            if g.edge_count() >= target || g.edge_count() == 0 {
                break;
            }
            let edges = g.edge_list();
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            let mut h = g.clone();
            h.remove_edge(a, b);
            pairs.shuffle(&mut rng);
            greedy_fill(&mut h, &pairs);
            if h.edge_count() >= g.edge_count() {
                // Sideways moves keep the walk from freezing.
                g = h;
            }
        }
        if g.edge_count() > best.edge_count() {
            best = g;
        }
        if best.edge_count() >= target {
            break;
        }
    }
    debug_assert!(best.girth().at_least(6));
    Ok(best)
}

fn greedy_fill(g: &mut SmallGraph, pairs: &[(usize, usize)]) {
    for &(u, v) in pairs {
        if !g.has_edge(u, v) && far_apart(g, u, v) {
            g.add_edge(u, v).expect("valid pair");
        }
    }
}

/// A `k`-vertex graph with girth >= 6 and at least `m` edges, if the
/// generator finds one within the default budget. `None` means the
/// generator gave up, not that no such graph exists.
pub fn girth6_graph(k: usize, m: usize, seed: u64) -> Result<Option<SmallGraph>> {
    let g = girth6_best(k, m, seed, GeneratorBudget::default())?;
    Ok((g.edge_count() >= m).then_some(g))
}
