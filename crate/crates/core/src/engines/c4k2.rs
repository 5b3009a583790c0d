//! Balanced `C_{4k+2}` in a list coloring with at least one bicolored edge.
//!
//! Bicolored edges are first fixed to single colors keeping the classes
//! balanced. In the resulting 2-coloring a patterned `K_{2t}`, `t = 3k+1`,
//! with halves `X`, `Y` is located; if there is none, the chosen bicolored
//! edge is flipped and the search repeated. Write `P` for the color inside
//! `X` and `S` for the other one. A type-A pattern yields the cycle directly; a
//! type-B pattern yields it together with one bicolored edge `e = uv`, with
//! a construction chosen by where `e` sits relative to the pattern. Inside
//! the pattern every path is forced, so vertices are simply taken in order.

use alloc::vec;
use alloc::vec::Vec;

use super::pattern::{find_pattern, PatternKind, PatternWitness};
use super::{checked_cycle, fallback, EngineOutcome, Picker, Route};
use crate::coloring::{Color, Label, ListColoring, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::NamedGraph;

/// Balanced `C_{4k+2}` via the pattern cases, or the generic search when no
/// pattern is found or no case applies.
pub fn find_balanced_c4k2(c: &ListColoring, k: usize) -> Result<Option<EngineOutcome>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let target = NamedGraph::Cycle(4 * k + 2).build()?;
    if c.vertex_count() < 4 * k + 2 {
        return Ok(None);
    }
    let fixed = c.fix_bicolored_balanced();
    let e = c.pairs_with(Label::RB).into_iter().next();
    let mut attempts = vec![fixed];
    if let Some((u, v)) = e {
        // The chosen edge may sit in a pattern only under its other color.
        let mut flipped = attempts[0].as_list().clone();
        flipped.set(u, v, Label::from(attempts[0].color(u, v).other()));
        attempts.push(TwoColoring::new(flipped)?);
    }
    let out = attempts
        .iter()
        .find_map(|fixed| {
            let p = find_pattern(fixed, 3 * k + 1)?;
            Builder { c, fixed, p: &p, k }.dispatch(e)
        })
        .or_else(|| fallback(c, target));
    Ok(out)
}

struct Builder<'a> {
    c: &'a ListColoring,
    fixed: &'a TwoColoring,
    p: &'a PatternWitness,
    k: usize,
}

impl Builder<'_> {
    fn dispatch(&self, e: Option<(usize, usize)>) -> Option<EngineOutcome> {
        if self.p.kind == PatternKind::TypeA {
            return self.case1();
        }
        let (u, v) = e?;
        let side = |w: usize| {
            if self.p.x.contains(&w) {
                Some(0)
            } else if self.p.y.contains(&w) {
                Some(1)
            } else {
                None
            }
        };
        match (side(u), side(v)) {
            (Some(a), Some(b)) if a == b => self.case2_1(u, v, a),
            (Some(a), Some(_)) => self.case2_2(u, v, a),
            (Some(a), None) => self.case3(u, v, a),
            (None, Some(b)) => self.case3(v, u, b),
            (None, None) => self.case4(u, v),
        }
    }

    /// `(A, B)`: the half with index `a` first.
    fn halves(&self, a: usize) -> (&[usize], &[usize]) {
        if a == 0 {
            (&self.p.x, &self.p.y)
        } else {
            (&self.p.y, &self.p.x)
        }
    }

    /// Emits the closed walk with colors from the fixed coloring, except
    /// that the edge `e` (if given) gets `e_color`.
    fn emit(&self, cycle: &[usize], e: Option<((usize, usize), Color)>, route: Route) -> Option<EngineOutcome> {
        let m = cycle.len();
        debug_assert_eq!(m, 4 * self.k + 2);
        let colors: Vec<Color> = (0..m)
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % m]);
                match e {
                    Some(((u, v), col)) if (a, b) == (u, v) || (a, b) == (v, u) => col,
                    _ => self.fixed.color(a, b),
                }
            })
            .collect();
        checked_cycle(self.c, cycle, &colors, route, Some(self.p.clone()))
    }

    /// Zigzag starting after a vertex of half `from` with `len` edges; the
    /// returned vertices alternate starting in the other half.
    fn zigzag(&self, pick: &mut Picker, from_half: &[usize], other: &[usize], len: usize) -> Option<Vec<usize>> {
        (0..len)
            .map(|i| pick.take(if i % 2 == 0 { other } else { from_half }))
            .collect()
    }

    /// Primary path of `2k+1` edges in `X`, crossing edge, secondary path of
    /// `2k-1` edges in `Y`, crossing edge back.
    fn case1(&self) -> Option<EngineOutcome> {
        let k = self.k;
        let mut pick = Picker::default();
        let mut cycle = pick.take_many(&self.p.x, 2 * k + 2)?;
        cycle.extend(pick.take_many(&self.p.y, 2 * k)?);
        self.emit(&cycle, None, Route::Case1)
    }

    /// `e = uv` inside half `a`: `u v y0`, a primary path of `2k+1` edges in
    /// the other half, then a zigzag of `2k-1` crossing edges back to `u`;
    /// `e` takes the secondary color.
    fn case2_1(&self, u: usize, v: usize, a: usize) -> Option<EngineOutcome> {
        let k = self.k;
        let (ha, hb) = self.halves(a);
        let mut pick = Picker::default();
        pick.mark(u);
        pick.mark(v);
        let mut cycle = vec![u, v];
        cycle.extend(pick.take_many(hb, 2 * k + 2)?);
        // The zigzag's last edge lands on u, so only 2k-2 fresh vertices.
        cycle.extend(self.zigzag(&mut pick, hb, ha, 2 * k - 2)?);
        self.emit(&cycle, Some(((u, v), self.p.secondary())), Route::Case2_1)
    }

    /// `e = uv` across, `u` in half `a`: `u v`, a zigzag of `2k+1` crossing
    /// edges ending in `u`'s half, then a primary path of `2k` edges back to
    /// `u`; `e` takes the primary color.
    fn case2_2(&self, u: usize, v: usize, a: usize) -> Option<EngineOutcome> {
        let k = self.k;
        let (ha, hb) = self.halves(a);
        let mut pick = Picker::default();
        pick.mark(u);
        pick.mark(v);
        let mut cycle = vec![u, v];
        cycle.extend(self.zigzag(&mut pick, hb, ha, 2 * k + 1)?);
        cycle.extend(pick.take_many(ha, 2 * k - 1)?);
        self.emit(&cycle, Some(((u, v), self.p.primary())), Route::Case2_2)
    }

    /// `e = uv` with `u` in half `a` and `v` outside the pattern: a primary
    /// path of `2k` edges from `u`, a zigzag of `2k` crossing edges to `w`,
    /// then `w v u`; `e` takes the color `wv` does not have.
    fn case3(&self, u: usize, v: usize, a: usize) -> Option<EngineOutcome> {
        let k = self.k;
        let (ha, hb) = self.halves(a);
        let mut pick = Picker::default();
        pick.mark(u);
        pick.mark(v);
        let mut cycle = vec![u];
        cycle.extend(pick.take_many(ha, 2 * k)?);
        cycle.extend(self.zigzag(&mut pick, ha, hb, 2 * k)?);
        let w = *cycle.last().expect("nonempty");
        cycle.push(v);
        let e_color = self.fixed.color(w, v).other();
        self.emit(&cycle, Some(((u, v), e_color)), Route::Case3)
    }

    fn case4(&self, u: usize, v: usize) -> Option<EngineOutcome> {
        let p = self.p.primary();
        for a in [0, 1] {
            let (ha, _) = self.halves(a);
            for (s, t) in [(u, v), (v, u)] {
                if let Some(&x) = ha.iter().find(|&&x| self.fixed.color(s, x) == p) {
                    return self.case4_1(t, s, x, a);
                }
            }
        }
        self.case4_2(u, v)
    }

    /// `w v u x` with `ux` primary, a primary path of `2k-1` edges from `x`,
    /// then a zigzag of `2k` crossing edges to `w`; `e` takes the color `vw`
    /// does not have.
    fn case4_1(&self, v: usize, u: usize, x: usize, a: usize) -> Option<EngineOutcome> {
        let k = self.k;
        let (ha, hb) = self.halves(a);
        let mut pick = Picker::default();
        for z in [u, v, x] {
            pick.mark(z);
        }
        let mut tail = vec![x];
        tail.extend(pick.take_many(ha, 2 * k - 1)?);
        tail.extend(self.zigzag(&mut pick, ha, hb, 2 * k)?);
        let w = tail.pop().expect("nonempty");
        let mut cycle = vec![w, v, u];
        cycle.extend(tail);
        let e_color = self.fixed.color(v, w).other();
        self.emit(&cycle, Some(((u, v), e_color)), Route::Case4_1)
    }

    /// Every edge from `u`, `v` to the pattern is secondary: `x' v u x`, a
    /// primary path of `2k+1` edges from `x`, then a zigzag of `2k-2`
    /// crossing edges to `x'`; `e` takes the secondary color.
    fn case4_2(&self, u: usize, v: usize) -> Option<EngineOutcome> {
        let k = self.k;
        let (ha, hb) = (&self.p.x[..], &self.p.y[..]);
        let mut pick = Picker::default();
        pick.mark(u);
        pick.mark(v);
        let mut tail = pick.take_many(ha, 2 * k + 2)?;
        tail.extend(self.zigzag(&mut pick, ha, hb, 2 * k - 2)?);
        let x_end = tail.pop().expect("nonempty");
        let mut cycle = vec![x_end, v, u];
        cycle.extend(tail);
        self.emit(&cycle, Some(((u, v), self.p.secondary())), Route::Case4_2)
    }
}
