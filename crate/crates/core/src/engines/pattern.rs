//! Search for the two unavoidable colored `K_{2t}` patterns.

use alloc::vec::Vec;

use crate::coloring::{Color, TwoColoring};
use crate::graph::{low_bits, Bits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `X` in the primary color, `Y` and the crossing edges in the other.
    TypeA,
    /// Both halves in the primary color, crossing edges in the other.
    TypeB,
}

/// A `K_{2t}` split into halves `X`, `Y`. The primary color is red unless
/// `swapped`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternWitness {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub kind: PatternKind,
    pub swapped: bool,
}

impl PatternWitness {
    pub fn primary(&self) -> Color {
        if self.swapped {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn secondary(&self) -> Color {
        self.primary().other()
    }

    pub fn half_size(&self) -> usize {
        self.x.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x.contains(&v) || self.y.contains(&v)
    }

    /// Checks every edge of the pattern against `c`.
    pub fn verify(&self, c: &TwoColoring) -> bool {
        let t = self.x.len();
        if self.y.len() != t || t == 0 {
            return false;
        }
        let mut seen = 0u64;
        for &v in self.x.iter().chain(&self.y) {
            if v >= c.vertex_count() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1u64 << v;
        }
        let (p, s) = (self.primary(), self.secondary());
        let y_color = match self.kind {
            PatternKind::TypeA => s,
            PatternKind::TypeB => p,
        };
        let inside = |set: &[usize], col: Color| {
            set.iter()
                .enumerate()
                .all(|(i, &a)| set[i + 1..].iter().all(|&b| c.color(a, b) == col))
        };
        inside(&self.x, p)
            && inside(&self.y, y_color)
            && self.x.iter().all(|&a| self.y.iter().all(|&b| c.color(a, b) == s))
    }
}

/// Result of a budgeted pattern search.
#[derive(Clone, Debug)]
pub struct PatternSearch {
    pub witness: Option<PatternWitness>,
    pub nodes: u64,
    /// The search finished within budget, so `None` means no pattern exists.
    pub complete: bool,
}

/// Default node budget of [`find_pattern`].
pub const PATTERN_BUDGET: u64 = 4_000_000;

/// First pattern with halves of size `t`: type-B before type-A, red primary
/// before blue, then lexicographically smallest `X` and `Y`.
pub fn find_pattern(c: &TwoColoring, t: usize) -> Option<PatternWitness> {
    find_pattern_with_budget(c, t, PATTERN_BUDGET).witness
}

/// Exhaustive clique-pair search: `X` ranges over primary cliques of size
/// `t`, and `Y` is a clique of the required color inside the common
/// secondary neighborhood of `X`.
pub fn find_pattern_with_budget(c: &TwoColoring, t: usize, budget: u64) -> PatternSearch {
    let mut s = Search {
        c,
        t,
        budget,
        nodes: 0,
        out_of_budget: false,
    };
    let mut witness = None;
    if t > 0 && 2 * t <= c.vertex_count() {
        'outer: for kind in [PatternKind::TypeB, PatternKind::TypeA] {
            for primary in [Color::Red, Color::Blue] {
                if let Some(w) = s.run(kind, primary) {
                    witness = Some(w);
                    break 'outer;
                }
            }
        }
    }
    debug_assert!(witness.as_ref().is_none_or(|w| w.verify(c)));
    PatternSearch {
        witness,
        nodes: s.nodes,
        complete: !s.out_of_budget,
    }
}

struct Search<'a> {
    c: &'a TwoColoring,
    t: usize,
    budget: u64,
    nodes: u64,
    out_of_budget: bool,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
        }
        !self.out_of_budget
    }

    fn run(&mut self, kind: PatternKind, p: Color) -> Option<PatternWitness> {
        let all = low_bits(self.c.vertex_count());
        let mut x = Vec::with_capacity(self.t);
        let y_color = if kind == PatternKind::TypeA { p.other() } else { p };
        let y = self.grow_x(&mut x, all, all, p, y_color)?;
        Some(PatternWitness {
            x,
            y,
            kind,
            swapped: p == Color::Blue,
        })
    }

    /// `cand`: vertices joined to all of `x` in `p`; `common`: vertices joined
    /// to all of `x` in the other color.
    fn grow_x(&mut self, x: &mut Vec<usize>, cand: u64, common: u64, p: Color, y_color: Color) -> Option<Vec<usize>> {
        if !self.tick() {
            return None;
        }
        if (common.count_ones() as usize) < self.t {
            return None;
        }
        if x.len() == self.t {
            let mut y = Vec::with_capacity(self.t);
            return self.clique_in(&mut y, common, y_color).then_some(y);
        }
        if ((cand.count_ones() as usize) + x.len()) < self.t {
            return None;
        }
        for v in Bits(cand) {
            let higher = !low_bits(v + 1);
            x.push(v);
            let found = self.grow_x(
                x,
                cand & self.c.row(v, p) & higher,
                common & self.c.row(v, p.other()),
                p,
                y_color,
            );
            if found.is_some() {
                return found;
            }
            x.pop();
            if self.out_of_budget {
                return None;
            }
        }
        None
    }

    fn clique_in(&mut self, y: &mut Vec<usize>, cand: u64, col: Color) -> bool {
        if !self.tick() {
            return false;
        }
        if y.len() == self.t {
            return true;
        }
        if (cand.count_ones() as usize) + y.len() < self.t {
            return false;
        }
        for v in Bits(cand) {
            y.push(v);
            if self.clique_in(y, cand & self.c.row(v, col) & !low_bits(v + 1), col) {
                return true;
            }
            y.pop();
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}
