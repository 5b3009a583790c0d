//! Generic search for balanced copies of a target graph in a list coloring.
//!
//! Since the host is complete, every injective vertex map is an embedding;
//! the search is over such maps, placing target vertices in a
//! connectivity-first order. A partial map is abandoned when
//!
//! - more than `⌈e/2⌉` placed edges are red-only, or more than `⌈e/2⌉`
//!   are blue-only (bicolored edges count toward neither), or
//! - a vertex cover of one color class shows that the copy can never
//!   collect `⌊e/2⌋` edges allowing that color.
//!
//! Target vertices with identical neighborhoods (twins) are interchangeable,
//! so their images are forced to increase along the placement order. This
//! drops only maps whose image edge set is already covered by another map.

use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, Label, ListColoring};
use crate::graph::{low_bits, pattern_order, Bits, SmallGraph};

/// An embedding of the target into `K_n` with a color for every target edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BalancedWitness {
    /// Host vertex of each target vertex.
    pub mapping: Vec<usize>,
    /// Chosen color of each target edge, in the target's lexicographic edge order.
    pub assignment: Vec<Color>,
}

impl BalancedWitness {
    pub fn red_count(&self) -> usize {
        self.assignment.iter().filter(|&&c| c == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.assignment.len() - self.red_count()
    }

    /// Host edges `(u, v, color)` of the copy, `u < v`, in target edge order.
    pub fn image_edges(&self, g: &SmallGraph) -> Vec<(usize, usize, Color)> {
        g.edges()
            .zip(&self.assignment)
            .map(|((a, b), &c)| {
                let (u, v) = (self.mapping[a], self.mapping[b]);
                (u.min(v), u.max(v), c)
            })
            .collect()
    }

    /// Builds a witness for a target given as a closed walk of host vertices
    /// (a cycle `v0 v1 ... v_{m-1} v0`), with one color per consecutive edge.
    pub fn from_cycle(cycle: &[usize], colors: &[Color]) -> (SmallGraph, BalancedWitness) {
        let m = cycle.len();
        debug_assert_eq!(colors.len(), m);
        let g = crate::graph::NamedGraph::Cycle(m).build().expect("cycle length >= 3");
        let assignment = g
            .edges()
            .map(|(a, b)| {
                // Pattern edge (i, i+1) or (0, m-1) closes at index m-1.
                let i = if a == 0 && b == m - 1 { m - 1 } else { a };
                colors[i]
            })
            .collect();
        (
            g,
            BalancedWitness {
                mapping: cycle.to_vec(),
                assignment,
            },
        )
    }

    /// Same as [`from_cycle`](Self::from_cycle) for an open walk (a path).
    pub fn from_path(path: &[usize], colors: &[Color]) -> (SmallGraph, BalancedWitness) {
        let m = path.len() - 1;
        debug_assert_eq!(colors.len(), m);
        let g = crate::graph::NamedGraph::Path(m).build().expect("path length >= 1");
        let assignment = g.edges().map(|(a, _)| colors[a]).collect();
        (
            g,
            BalancedWitness {
                mapping: path.to_vec(),
                assignment,
            },
        )
    }
}

/// True iff `w` is an injective map of `g` into `K_n` whose colors are
/// allowed by the lists and split the edges within one of each other.
pub fn verify_witness(c: &ListColoring, g: &SmallGraph, w: &BalancedWitness) -> bool {
    let n = c.vertex_count();
    if w.mapping.len() != g.vertex_count() || w.assignment.len() != g.edge_count() {
        return false;
    }
    let mut used = 0u64;
    for &h in &w.mapping {
        if h >= n || used >> h & 1 == 1 {
            return false;
        }
        used |= 1u64 << h;
    }
    for ((a, b), &col) in g.edges().zip(&w.assignment) {
        if !c.allows(w.mapping[a], w.mapping[b], col) {
            return false;
        }
    }
    w.red_count().abs_diff(w.blue_count()) <= 1
}

/// Finds a balanced copy of `g`, or `None` if no embedding admits one.
/// Deterministic: the first witness in the search order is returned.
pub fn find_balanced_copy(c: &ListColoring, g: &SmallGraph) -> Option<BalancedWitness> {
    BalancedSearch::new(c, g).find()
}

/// Greedy vertex cover of the graph given by `rows` on `n` vertices.
fn greedy_cover(n: usize, rows: &[u64]) -> u64 {
    let mut rows = rows.to_vec();
    let mut cover = 0u64;
    loop {
        let Some(v) = (0..n)
            .filter(|&v| rows[v] != 0)
            .max_by_key(|&v| (rows[v].count_ones(), core::cmp::Reverse(v)))
        else {
            return cover;
        };
        cover |= 1u64 << v;
        for u in Bits(rows[v]) {
            rows[u] &= !(1u64 << v);
        }
        rows[v] = 0;
    }
}

/// Twin classes: vertices with `N(u) \ {v} = N(v) \ {u}`.
fn twin_classes(g: &SmallGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut class: Vec<usize> = (0..n).collect();
    let twins = |u: usize, v: usize| {
        let mask = !(1u64 << u | 1u64 << v);
        g.row(u) & mask == g.row(v) & mask
    };
    for v in 0..n {
        for u in 0..v {
            if class[u] == u && twins(u, v) && (0..v).filter(|&x| class[x] == u).all(|x| twins(x, v)) {
                class[v] = u;
                break;
            }
        }
    }
    class
}

/// Reusable search state for one coloring and one target.
pub struct BalancedSearch<'a> {
    c: &'a ListColoring,
    g: &'a SmallGraph,
    n: usize,
    order: Vec<usize>,
    /// For each depth: (earlier target vertex, edge index) pairs.
    back: Vec<Vec<(usize, usize)>>,
    /// For each depth: the target vertex whose image must be smaller.
    after: Vec<Option<usize>>,
    degree: Vec<usize>,
    edge_count: usize,
    lo: usize,
    hi: usize,
    max_degree: usize,
    covers: [Option<u64>; 2],
    impossible: bool,
}

struct Frame {
    map: Vec<usize>,
    inv: Vec<usize>,
    used: u64,
    rem_deg: Vec<usize>,
    labels: Vec<Label>,
    forced: [usize; 2],
    capable: [usize; 2],
    placed_edges: usize,
}

#[inline]
fn idx(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

impl<'a> BalancedSearch<'a> {
    pub fn new(c: &'a ListColoring, g: &'a SmallGraph) -> Self {
        let n = c.vertex_count();
        let order = pattern_order(g);
        let mut pos = vec![0usize; g.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let edges = g.edge_list();
        let edge_index = |a: usize, b: usize| {
            let key = (a.min(b), a.max(b));
            edges.binary_search(&key).expect("edge present")
        };
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                g.neighbors(v)
                    .filter(|&u| pos[u] < i)
                    .map(|u| (u, edge_index(u, v)))
                    .collect()
            })
            .collect();
        let class = twin_classes(g);
        let after = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                order[..i]
                    .iter()
                    .rev()
                    .copied()
                    .find(|&u| class[u] == class[v] && u != v)
            })
            .collect();
        let e = edges.len();
        let max_degree = g.max_degree();
        let mut covers = [None, None];
        let mut impossible = g.vertex_count() > n;
        if !impossible && e > 0 {
            for col in [Color::Red, Color::Blue] {
                let rows: Vec<u64> = (0..n).map(|v| c.class_row(v, col)).collect();
                let cover = greedy_cover(n, &rows);
                let bound = max_degree * cover.count_ones() as usize;
                if bound < e / 2 {
                    impossible = true;
                } else if bound < e {
                    covers[idx(col)] = Some(cover);
                }
            }
        }
        BalancedSearch {
            c,
            g,
            n,
            order,
            back,
            after,
            degree: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            edge_count: e,
            lo: e / 2,
            hi: e.div_ceil(2),
            max_degree,
            covers,
            impossible,
        }
    }

    /// Host vertices the first target vertex may be mapped to; searching
    /// each root separately covers the whole space.
    pub fn roots(&self) -> core::ops::Range<usize> {
        if self.impossible || self.order.is_empty() {
            0..0
        } else {
            0..self.n
        }
    }

    pub fn find(&self) -> Option<BalancedWitness> {
        if self.impossible {
            return None;
        }
        if self.order.is_empty() {
            return Some(BalancedWitness {
                mapping: Vec::new(),
                assignment: Vec::new(),
            });
        }
        self.roots().find_map(|h| self.find_rooted(h))
    }

    /// Searches only maps sending the first target vertex to host vertex `root`.
    pub fn find_rooted(&self, root: usize) -> Option<BalancedWitness> {
        if self.impossible || root >= self.n || self.order.is_empty() {
            return None;
        }
        let k = self.g.vertex_count();
        let mut f = Frame {
            map: vec![usize::MAX; k],
            inv: vec![usize::MAX; self.n],
            used: 0,
            rem_deg: self.degree.clone(),
            labels: vec![Label::B; self.edge_count],
            forced: [0, 0],
            capable: [0, 0],
            placed_edges: 0,
        };
        (self.try_place(&mut f, 0, root) && self.descend(&mut f, 1)).then(|| self.witness(&f))
    }

    fn descend(&self, f: &mut Frame, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let mut cand = low_bits(self.n) & !f.used;
        if let Some(prev) = self.after[depth] {
            cand &= !low_bits(f.map[prev] + 1);
        }
        for h in Bits(cand) {
            if self.try_place(f, depth, h) {
                if self.descend(f, depth + 1) {
                    return true;
                }
                self.unplace(f, depth, h);
            }
        }
        false
    }

    /// Places `order[depth]` at `h`; on pruning, undoes and returns false.
    fn try_place(&self, f: &mut Frame, depth: usize, h: usize) -> bool {
        let x = self.order[depth];
        f.map[x] = h;
        f.inv[h] = x;
        f.used |= 1u64 << h;
        for &(u, ei) in &self.back[depth] {
            let l = self.c.label(h, f.map[u]);
            f.labels[ei] = l;
            match l {
                Label::R => {
                    f.forced[0] += 1;
                    f.capable[0] += 1;
                }
                Label::B => {
                    f.forced[1] += 1;
                    f.capable[1] += 1;
                }
                Label::RB => {
                    f.capable[0] += 1;
                    f.capable[1] += 1;
                }
            }
            f.rem_deg[u] -= 1;
        }
        f.rem_deg[x] -= self.back[depth].len();
        f.placed_edges += self.back[depth].len();
        let ok = f.forced[0] <= self.hi && f.forced[1] <= self.hi && self.cover_feasible(f, depth);
        if !ok {
            self.unplace(f, depth, h);
        }
        ok
    }

    fn unplace(&self, f: &mut Frame, depth: usize, h: usize) {
        let x = self.order[depth];
        for &(u, ei) in &self.back[depth] {
            match f.labels[ei] {
                Label::R => {
                    f.forced[0] -= 1;
                    f.capable[0] -= 1;
                }
                Label::B => {
                    f.forced[1] -= 1;
                    f.capable[1] -= 1;
                }
                Label::RB => {
                    f.capable[0] -= 1;
                    f.capable[1] -= 1;
                }
            }
            f.rem_deg[u] += 1;
        }
        f.rem_deg[x] += self.back[depth].len();
        f.placed_edges -= self.back[depth].len();
        f.map[x] = usize::MAX;
        f.inv[h] = usize::MAX;
        f.used &= !(1u64 << h);
    }

    /// Every future edge allowing color `col` touches the cover, so the cover
    /// bounds how many such edges can still appear.
    fn cover_feasible(&self, f: &Frame, depth: usize) -> bool {
        let remaining_edges = self.edge_count - f.placed_edges;
        let unplaced = self.order.len() - depth - 1;
        for col in [Color::Red, Color::Blue] {
            let Some(cover) = self.covers[idx(col)] else { continue };
            let mut bound = 0usize;
            for h in Bits(cover & f.used) {
                bound += f.rem_deg[f.inv[h]];
            }
            let free = (cover & !f.used).count_ones() as usize;
            bound += free.min(unplaced) * self.max_degree;
            if f.capable[idx(col)] + bound.min(remaining_edges) < self.lo {
                return false;
            }
        }
        true
    }

    fn witness(&self, f: &Frame) -> BalancedWitness {
        let mut reds_needed = self.lo.saturating_sub(f.forced[0]);
        let assignment = f
            .labels
            .iter()
            .map(|&l| match l {
                Label::R => Color::Red,
                Label::B => Color::Blue,
                Label::RB => {
                    if reds_needed > 0 {
                        reds_needed -= 1;
                        Color::Red
                    } else {
                        Color::Blue
                    }
                }
            })
            .collect();
        BalancedWitness {
            mapping: f.map.clone(),
            assignment,
        }
    }
}

/// Outcome of scanning every `m`-set of host vertices for a balanced `K_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueScan {
    /// Lexicographically first balanced clique, if any.
    pub witness: Option<BalancedWitness>,
    /// Number of `m`-sets fully examined (all of them when no witness exists).
    pub sets_examined: u64,
}

/// Scans the `m`-sets whose smallest vertex is `first`, in lexicographic order.
/// A complete target has one copy per vertex set, so this is exhaustive for
/// `K_m`. Partial sets are cut as soon as either forced count exceeds
/// `⌈C(m,2)/2⌉`; cut sets still count as examined.
pub fn scan_cliques_from(c: &ListColoring, m: usize, first: usize) -> CliqueScan {
    let n = c.vertex_count();
    let e = crate::choose2(m);
    let mut scan = CliqueScan {
        witness: None,
        sets_examined: 0,
    };
    if m == 0 || first >= n || n - first < m {
        return scan;
    }
    let mut chosen = vec![first];
    clique_walk(c, m, e.div_ceil(2), &mut chosen, 1u64 << first, [0, 0], &mut scan);
    scan
}

/// Number of `m`-subsets of `0..len`.
fn subsets(len: usize, m: usize) -> u64 {
    if m > len {
        return 0;
    }
    let m = m.min(len - m);
    (0..m).fold(1u64, |acc, i| acc * (len - i) as u64 / (i as u64 + 1))
}

fn clique_walk(
    c: &ListColoring,
    m: usize,
    hi: usize,
    chosen: &mut Vec<usize>,
    set: u64,
    forced: [usize; 2],
    scan: &mut CliqueScan,
) -> bool {
    let n = c.vertex_count();
    if chosen.len() == m {
        scan.sets_examined += 1;
        let g = SmallGraph::complete(m).expect("m <= 64");
        let e = g.edge_count();
        let mut reds_needed = (e / 2).saturating_sub(forced[0]);
        let assignment = g
            .edges()
            .map(|(a, b)| match c.label(chosen[a], chosen[b]) {
                Label::R => Color::Red,
                Label::B => Color::Blue,
                Label::RB if reds_needed > 0 => {
                    reds_needed -= 1;
                    Color::Red
                }
                Label::RB => Color::Blue,
            })
            .collect();
        scan.witness = Some(BalancedWitness {
            mapping: chosen.clone(),
            assignment,
        });
        return true;
    }
    let last = *chosen.last().expect("nonempty");
    for v in last + 1..n {
        let need = m - chosen.len() - 1;
        if n - v - 1 < need {
            break;
        }
        let r = forced[0] + (c.only_row(v, Color::Red) & set).count_ones() as usize;
        let b = forced[1] + (c.only_row(v, Color::Blue) & set).count_ones() as usize;
        if r > hi || b > hi {
            scan.sets_examined += subsets(n - v - 1, need);
            continue;
        }
        chosen.push(v);
        let found = clique_walk(c, m, hi, chosen, set | 1u64 << v, [r, b], scan);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// [`scan_cliques_from`] over every first vertex.
pub fn scan_cliques(c: &ListColoring, m: usize) -> CliqueScan {
    let mut total = CliqueScan {
        witness: None,
        sets_examined: 0,
    };
    for first in 0..c.vertex_count() {
        let s = scan_cliques_from(c, m, first);
        total.sets_examined += s.sets_examined;
        if s.witness.is_some() {
            total.witness = s.witness;
            break;
        }
    }
    total
}
