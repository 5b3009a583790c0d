//! Balanced `C_{4k}` from a balanced `C_{4k-1}`.
//!
//! The odd cycle has `2k` edges of a majority color `M` and `2k-1` of the
//! minority color `m`, so somewhere it reads `u0 -m- u1 -M- u2 -M- u3`.
//! Outside vertices split by the color of their edge to `u1`: `X` (minor)
//! and `Y` (major). Short detours through one or two outside vertices turn
//! the odd cycle into a balanced even one whenever certain edges have the
//! "wrong" color. When no detour applies, the edges inside `X` and inside
//! `Y` are all `M` and the edges between them are all `m`, and two direct
//! constructions on that structure remain.

use alloc::vec::Vec;

use super::odd::odd_cycle_from_path;
use super::{checked_cycle, cycle_colors, fallback, EngineOutcome, Route};
use crate::coloring::{Color, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::NamedGraph;
use crate::search::find_balanced_copy;

/// Node budget of the minority-zigzag search in the gluing step.
const GLUE_BUDGET: u64 = 2_000_000;

/// A balanced odd cycle rotated so that `cycle[0..4]` reads `u0 u1 u2 u3`
/// (with `u3 = u0` on a triangle), plus the split of outside vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleScaffold {
    pub cycle: Vec<usize>,
    pub major: Color,
    /// Outside vertices joined to `u1` in the minority color.
    pub x: Vec<usize>,
    /// Outside vertices joined to `u1` in the majority color.
    pub y: Vec<usize>,
}

impl CycleScaffold {
    /// Locates the minority-major-major run on a balanced odd cycle (either
    /// orientation) and splits the outside vertices.
    pub fn new(c: &TwoColoring, cycle: &[usize]) -> Result<Self> {
        let len = cycle.len();
        if len < 3 || len.is_multiple_of(2) {
            return Err(Error::Precondition("expected an odd cycle".into()));
        }
        let colors = cycle_colors(c, cycle);
        let red = colors.iter().filter(|&&x| x == Color::Red).count();
        if red.abs_diff(len - red) != 1 {
            return Err(Error::Precondition("odd cycle is not balanced".into()));
        }
        let major = if 2 * red > len { Color::Red } else { Color::Blue };
        let mut rotated = None;
        for dir in [false, true] {
            let seq: Vec<usize> = if dir {
                cycle.iter().rev().copied().collect()
            } else {
                cycle.to_vec()
            };
            let col = |i: usize| c.color(seq[i % len], seq[(i + 1) % len]);
            if let Some(s) = (0..len).find(|&s| col(s) != major && col(s + 1) == major && col(s + 2) == major) {
                rotated = Some((0..len).map(|j| seq[(s + j) % len]).collect::<Vec<_>>());
                break;
            }
        }
        let cycle = rotated.expect("a balanced odd cycle has a minor-major-major run");
        let on_cycle = cycle.iter().fold(0u64, |m, &v| m | 1u64 << v);
        let u1 = cycle[1];
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for v in (0..c.vertex_count()).filter(|&v| on_cycle >> v & 1 == 0) {
            if c.color(u1, v) == major {
                y.push(v);
            } else {
                x.push(v);
            }
        }
        Ok(CycleScaffold { cycle, major, x, y })
    }

    fn u(&self, i: usize) -> usize {
        self.cycle[i % self.cycle.len()]
    }

    fn minor(&self) -> Color {
        self.major.other()
    }

    /// Cycle with `v` inserted after position `i`.
    fn insert_after(&self, i: usize, vs: &[usize]) -> Vec<usize> {
        let mut out = self.cycle[..=i].to_vec();
        out.extend_from_slice(vs);
        out.extend_from_slice(&self.cycle[i + 1..]);
        out
    }

    /// Cycle with position `i` replaced by `vs`.
    fn replace_at(&self, i: usize, vs: &[usize]) -> Vec<usize> {
        let mut out = self.cycle[..i].to_vec();
        out.extend_from_slice(vs);
        out.extend_from_slice(&self.cycle[i + 1..]);
        out
    }
}

fn finish(c: &TwoColoring, cycle: Vec<usize>, route: Route) -> Option<EngineOutcome> {
    let colors = cycle_colors(c, &cycle);
    checked_cycle(c.as_list(), &cycle, &colors, route, None)
}

/// Detours through one outside vertex.
pub fn one_vertex_detour(c: &TwoColoring, s: &CycleScaffold) -> Option<EngineOutcome> {
    let (major, minor) = (s.major, s.minor());
    let (u0, u2, u3) = (s.u(0), s.u(2), s.u(3));
    for &v in &s.y {
        if c.color(u2, v) == minor {
            return finish(c, s.insert_after(1, &[v]), Route::ClaimBB);
        }
        if c.color(u3, v) == minor {
            return finish(c, s.insert_after(2, &[v]), Route::ClaimBB);
        }
    }
    for &v in &s.x {
        if c.color(u2, v) == major {
            return finish(c, s.insert_after(1, &[v]), Route::ClaimX);
        }
        if c.color(u0, v) == minor {
            return finish(c, s.insert_after(0, &[v]), Route::ClaimX);
        }
    }
    None
}

/// Detours through two outside vertices; meant to run after
/// [`one_vertex_detour`] found nothing.
pub fn two_vertex_detour(c: &TwoColoring, s: &CycleScaffold) -> Option<EngineOutcome> {
    let (major, minor) = (s.major, s.minor());
    for (i, &v) in s.x.iter().enumerate() {
        for &w in &s.x[i + 1..] {
            if c.color(v, w) == minor {
                // u0 v w u2 replaces u0 u1 u2.
                return finish(c, s.replace_at(1, &[v, w]), Route::ClaimXY);
            }
        }
    }
    for (i, &v) in s.y.iter().enumerate() {
        for &w in &s.y[i + 1..] {
            if c.color(v, w) == minor {
                // u1 v w u3 replaces u1 u2 u3.
                return finish(c, s.replace_at(2, &[v, w]), Route::ClaimXY);
            }
        }
    }
    for &v in &s.x {
        for &w in &s.y {
            if c.color(v, w) == major {
                return finish(c, s.replace_at(2, &[v, w]), Route::ClaimXY);
            }
        }
    }
    None
}

/// Once no detour applies: checks that `X` and `Y` have majority interiors
/// and minority crossings, then builds the cycle from that structure.
pub fn close_from_structure(c: &TwoColoring, s: &CycleScaffold, k: usize) -> Option<EngineOutcome> {
    let (major, minor) = (s.major, s.minor());
    let inside = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| c.color(a, b) == major))
    };
    let across = s.x.iter().all(|&a| s.y.iter().all(|&b| c.color(a, b) == minor));
    if !(inside(&s.x) && inside(&s.y) && across) {
        return None;
    }
    let (big, small) = if s.x.len() > s.y.len() {
        (&s.x, &s.y)
    } else {
        (&s.y, &s.x)
    };
    if small.len() >= k && big.len() >= 3 * k {
        // Majority path of 2k edges in the big side, minority zigzag back.
        let mut cycle: Vec<usize> = big[..=2 * k].to_vec();
        let spare = &big[2 * k + 1..];
        for i in 0..k {
            cycle.push(small[i]);
            if i + 1 < k {
                cycle.push(spare[i]);
            }
        }
        return finish(c, cycle, Route::LargeSides);
    }
    glue(c, big, minor, major, k)
}

/// Minority zigzag `v1 w1 v2 ... v_k` (v's in `big`, w's outside it), then
/// `v_k -M- v -m- w -m- v'` with `w` a fresh outside vertex, then a majority
/// path of `2k-1` edges through `big` back to `v1`.
fn glue(c: &TwoColoring, big: &[usize], minor: Color, major: Color, k: usize) -> Option<EngineOutcome> {
    let n = c.vertex_count();
    let big_mask = big.iter().fold(0u64, |m, &v| m | 1u64 << v);
    let rest: Vec<usize> = (0..n).filter(|&v| big_mask >> v & 1 == 0).collect();
    if big.len() < 3 * k {
        return None;
    }
    let mut g = Glue {
        c,
        big,
        rest: &rest,
        minor,
        major,
        k,
        nodes: 0,
        path: Vec::new(),
    };
    for &v1 in big {
        g.path.clear();
        g.path.push(v1);
        if let Some(cycle) = g.extend() {
            return finish(c, cycle, Route::Gluing);
        }
        if g.nodes > GLUE_BUDGET {
            break;
        }
    }
    None
}

struct Glue<'a> {
    c: &'a TwoColoring,
    big: &'a [usize],
    rest: &'a [usize],
    minor: Color,
    major: Color,
    k: usize,
    nodes: u64,
    path: Vec<usize>,
}

impl Glue<'_> {
    fn used(&self, v: usize) -> bool {
        self.path.contains(&v)
    }

    fn extend(&mut self) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes > GLUE_BUDGET {
            return None;
        }
        let big_count = self.path.len().div_ceil(2);
        if big_count == self.k && self.path.len() % 2 == 1 {
            return self.close();
        }
        let last = *self.path.last().expect("nonempty");
        let pool = if self.path.len() % 2 == 1 { self.rest } else { self.big };
        for &w in pool {
            if self.used(w) || self.c.color(last, w) != self.minor {
                continue;
            }
            self.path.push(w);
            let found = self.extend();
            self.path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn close(&self) -> Option<Vec<usize>> {
        let free_big: Vec<usize> = self.big.iter().copied().filter(|&v| !self.used(v)).collect();
        for &w in self.rest.iter().filter(|&&w| !self.used(w)) {
            let nbrs: Vec<usize> = free_big
                .iter()
                .copied()
                .filter(|&v| self.c.color(w, v) == self.minor)
                .collect();
            if nbrs.len() < 2 {
                continue;
            }
            let (v, v2) = (nbrs[0], nbrs[1]);
            let filler: Vec<usize> = free_big
                .iter()
                .copied()
                .filter(|&x| x != v && x != v2)
                .take(2 * self.k - 2)
                .collect();
            if filler.len() < 2 * self.k - 2 {
                return None;
            }
            let mut cycle = self.path.clone();
            cycle.extend_from_slice(&[v, w, v2]);
            cycle.extend_from_slice(&filler);
            debug_assert!(cycle.windows(2).all(
                |p| self.big.contains(&p[0]) != self.big.contains(&p[1]) || self.c.color(p[0], p[1]) == self.major
            ));
            return Some(cycle);
        }
        None
    }
}

/// Balanced `C_{4k}` in a 2-coloring via the detour chain; generic search
/// when the chain does not apply.
pub fn find_balanced_c4k(c: &TwoColoring, k: usize) -> Result<Option<EngineOutcome>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let target = NamedGraph::Cycle(4 * k).build()?;
    if c.vertex_count() < 4 * k {
        return Ok(None);
    }
    let path = NamedGraph::Path(4 * k - 2).build()?;
    let Some(p) = find_balanced_copy(c.as_list(), &path) else {
        return Ok(fallback(c.as_list(), target));
    };
    let odd = odd_cycle_from_path(c, &p.mapping)?;
    let cycle: Vec<usize> = odd.witness.mapping.clone();
    let s = CycleScaffold::new(c, &cycle)?;
    let out = one_vertex_detour(c, &s)
        .or_else(|| two_vertex_detour(c, &s))
        .or_else(|| close_from_structure(c, &s, k))
        .or_else(|| fallback(c.as_list(), target));
    Ok(out)
}
