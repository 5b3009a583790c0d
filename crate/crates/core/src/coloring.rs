//! 2-list edge colorings of `K_n`.
//!
//! Each unordered pair carries a nonempty list drawn from `{r, b}`. The red
//! class `R` holds the pairs whose list contains `r`, the blue class `B`
//! those containing `b`; bicolored pairs lie in both. A strict 2-coloring
//! is the special case with no bicolored pair, wrapped as [`TwoColoring`].

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

use crate::choose2;
use crate::error::{Error, Result};
use crate::graph::{low_bits, Bits, SmallGraph, MAX_VERTICES};

/// A single color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "r",
            Color::Blue => "b",
        })
    }
}

/// The list carried by one pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    R,
    B,
    RB,
}

impl Label {
    pub fn allows(self, c: Color) -> bool {
        matches!(
            (self, c),
            (Label::R, Color::Red) | (Label::B, Color::Blue) | (Label::RB, _)
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::R => "r",
            Label::B => "b",
            Label::RB => "rb",
        }
    }

    pub fn parse(s: &str) -> Option<Label> {
        match s {
            "r" => Some(Label::R),
            "b" => Some(Label::B),
            "rb" | "br" => Some(Label::RB),
            _ => None,
        }
    }
}

impl From<Color> for Label {
    fn from(c: Color) -> Label {
        match c {
            Color::Red => Label::R,
            Color::Blue => Label::B,
        }
    }
}

/// A 2-list edge coloring of `K_n`, stored as red and blue membership rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ListColoring {
    n: usize,
    red: Vec<u64>,
    blue: Vec<u64>,
}

/// Class-size accounting of a list coloring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorStats {
    pub red_size: usize,
    pub blue_size: usize,
    pub bicolored: usize,
    /// `min(|R|, |B|) - binom(n, 2) / 2`, exact.
    pub excess: Ratio<i64>,
}

impl ColorStats {
    /// Largest integer `b` with `|R|, |B| >= binom(n,2)/2 + b`.
    pub fn list_color_excess(&self) -> i64 {
        self.excess.floor().to_integer()
    }

    pub fn min_class(&self) -> usize {
        self.red_size.min(self.blue_size)
    }
}

impl ListColoring {
    /// Every pair gets the same list.
    pub fn uniform(n: usize, label: Label) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let all = low_bits(n);
        let full: Vec<u64> = (0..n).map(|v| all & !(1u64 << v)).collect();
        let empty = vec![0u64; n];
        let (red, blue) = match label {
            Label::R => (full, empty),
            Label::B => (empty, full),
            Label::RB => (full.clone(), full),
        };
        Ok(ListColoring { n, red, blue })
    }

    /// Labels every pair `u < v` with `f(u, v)`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Label,
    {
        let mut c = Self::uniform(n, Label::B)?;
        for u in 0..n {
            for v in u + 1..n {
                c.set(u, v, f(u, v));
            }
        }
        Ok(c)
    }

    /// Builds from raw membership rows, checking symmetry and that every
    /// pair has a nonempty list.
    pub fn from_rows(red: Vec<u64>, blue: Vec<u64>) -> Result<Self> {
        let n = red.len();
        if blue.len() != n {
            return Err(Error::InvalidParameter("red and blue rows differ in length".into()));
        }
        SmallGraph::from_rows(red.clone())?;
        SmallGraph::from_rows(blue.clone())?;
        let all = low_bits(n);
        for v in 0..n {
            let missing = all & !(1u64 << v) & !(red[v] | blue[v]);
            if missing != 0 {
                return Err(Error::Precondition(format!(
                    "pair ({v}, {}) has an empty list",
                    missing.trailing_zeros()
                )));
            }
        }
        Ok(ListColoring { n, red, blue })
    }

    /// The strict coloring whose red class is the edge set of `red`.
    pub fn from_red_graph(red: &SmallGraph) -> ListColoring {
        let n = red.vertex_count();
        let all = low_bits(n);
        let blue = (0..n).map(|v| all & !(1u64 << v) & !red.row(v)).collect();
        ListColoring {
            n,
            red: red.rows().to_vec(),
            blue,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        choose2(self.n)
    }

    /// Sets the list of pair `uv`. Panics on an out-of-range or equal pair.
    pub fn set(&mut self, u: usize, v: usize, label: Label) {
        assert!(u != v && u < self.n && v < self.n, "invalid pair ({u}, {v})");
        let (r, b) = match label {
            Label::R => (true, false),
            Label::B => (false, true),
            Label::RB => (true, true),
        };
        let put = |rows: &mut [u64], on: bool| {
            if on {
                rows[u] |= 1u64 << v;
                rows[v] |= 1u64 << u;
            } else {
                rows[u] &= !(1u64 << v);
                rows[v] &= !(1u64 << u);
            }
        };
        put(&mut self.red, r);
        put(&mut self.blue, b);
    }

    pub fn try_set(&mut self, u: usize, v: usize, label: Label) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.set(u, v, label);
        Ok(())
    }

    #[inline]
    pub fn label(&self, u: usize, v: usize) -> Label {
        let r = self.red[u] >> v & 1 == 1;
        let b = self.blue[u] >> v & 1 == 1;
        match (r, b) {
            (true, true) => Label::RB,
            (true, false) => Label::R,
            _ => Label::B,
        }
    }

    #[inline]
    pub fn allows(&self, u: usize, v: usize, c: Color) -> bool {
        match c {
            Color::Red => self.red[u] >> v & 1 == 1,
            Color::Blue => self.blue[u] >> v & 1 == 1,
        }
    }

    /// Row of pairs at `v` whose list contains `c`.
    #[inline]
    pub fn class_row(&self, v: usize, c: Color) -> u64 {
        match c {
            Color::Red => self.red[v],
            Color::Blue => self.blue[v],
        }
    }

    /// Row of pairs at `v` whose list is exactly `{c}`.
    #[inline]
    pub fn only_row(&self, v: usize, c: Color) -> u64 {
        match c {
            Color::Red => self.red[v] & !self.blue[v],
            Color::Blue => self.blue[v] & !self.red[v],
        }
    }

    #[inline]
    pub fn bicolored_row(&self, v: usize) -> u64 {
        self.red[v] & self.blue[v]
    }

    /// Graph of the pairs whose list contains `c`.
    pub fn class_graph(&self, c: Color) -> SmallGraph {
        let rows = match c {
            Color::Red => self.red.clone(),
            Color::Blue => self.blue.clone(),
        };
        SmallGraph::from_rows(rows).expect("rows are symmetric")
    }

    /// Graph of the bicolored pairs.
    pub fn bicolored_graph(&self) -> SmallGraph {
        let rows = (0..self.n).map(|v| self.bicolored_row(v)).collect();
        SmallGraph::from_rows(rows).expect("rows are symmetric")
    }

    /// Pairs `u < v` with the given list, in lexicographic order.
    pub fn pairs_with(&self, label: Label) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let row = match label {
                Label::R => self.only_row(u, Color::Red),
                Label::B => self.only_row(u, Color::Blue),
                Label::RB => self.bicolored_row(u),
            };
            out.extend(Bits(row & !low_bits(u + 1)).map(|v| (u, v)));
        }
        out
    }

    /// All pairs with their lists, lexicographic.
    pub fn labeled_pairs(&self) -> impl Iterator<Item = (usize, usize, Label)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).map(move |v| (u, v, self.label(u, v))))
    }

    fn half_count(rows: &[u64]) -> usize {
        rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn stats(&self) -> ColorStats {
        let red_size = Self::half_count(&self.red);
        let blue_size = Self::half_count(&self.blue);
        let bicolored = (0..self.n)
            .map(|v| self.bicolored_row(v).count_ones() as usize)
            .sum::<usize>()
            / 2;
        let excess = Ratio::from_integer(red_size.min(blue_size) as i64) - Ratio::new(self.pair_count() as i64, 2);
        ColorStats {
            red_size,
            blue_size,
            bicolored,
            excess,
        }
    }

    pub fn is_strict(&self) -> bool {
        (0..self.n).all(|v| self.bicolored_row(v) == 0)
    }

    /// Exchanges the roles of red and blue.
    pub fn swapped(&self) -> ListColoring {
        ListColoring {
            n: self.n,
            red: self.blue.clone(),
            blue: self.red.clone(),
        }
    }

    /// True when every list of `self` is contained in the matching list of `other`.
    pub fn is_refinement_of(&self, other: &ListColoring) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.red[v] & !other.red[v] == 0 && self.blue[v] & !other.blue[v] == 0)
    }

    /// Restricts to a strict coloring `R' ⊔ B'` with `R' ⊆ R`, `B' ⊆ B` and
    /// both classes larger than `k`.
    ///
    /// If `|R \ B| > k` the red class is `R \ B`; otherwise `R \ B` is topped
    /// up with bicolored pairs, in lexicographic order, to `k + 1` pairs and
    /// every other pair is blue.
    pub fn restrict_to_2coloring(&self, k: usize) -> Result<TwoColoring> {
        let s = self.stats();
        let total = self.pair_count();
        if s.red_size <= k {
            return Err(Error::Precondition(format!("|R| = {} must exceed k = {k}", s.red_size)));
        }
        if s.blue_size <= k {
            return Err(Error::Precondition(format!(
                "|B| = {} must exceed k = {k}",
                s.blue_size
            )));
        }
        if 2 * (k + 1) > total {
            return Err(Error::Precondition(format!(
                "2(k + 1) = {} must not exceed binom(n, 2) = {total}",
                2 * (k + 1)
            )));
        }
        let red_only = s.red_size - s.bicolored;
        let mut out = self.clone();
        if red_only > k {
            for (u, v) in self.pairs_with(Label::RB) {
                out.set(u, v, Label::B);
            }
        } else {
            let mut need = k + 1 - red_only;
            for (u, v) in self.pairs_with(Label::RB) {
                if need > 0 {
                    out.set(u, v, Label::R);
                    need -= 1;
                } else {
                    out.set(u, v, Label::B);
                }
            }
        }
        Ok(TwoColoring(out))
    }

    /// Resolves every bicolored pair to a single color, in lexicographic
    /// order, each going to the class that is currently smaller (red on ties).
    pub fn fix_bicolored_balanced(&self) -> TwoColoring {
        let mut red = 0usize;
        let mut blue = 0usize;
        for (_, _, l) in self.labeled_pairs() {
            match l {
                Label::R => red += 1,
                Label::B => blue += 1,
                Label::RB => {}
            }
        }
        let mut out = self.clone();
        for (u, v) in self.pairs_with(Label::RB) {
            if red <= blue {
                out.set(u, v, Label::R);
                red += 1;
            } else {
                out.set(u, v, Label::B);
                blue += 1;
            }
        }
        TwoColoring(out)
    }
}

impl fmt::Debug for ListColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.stats();
        write!(
            f,
            "ListColoring(n={}, |R|={}, |B|={}, rb={})",
            self.n, s.red_size, s.blue_size, s.bicolored
        )
    }
}

/// A strict 2-coloring: a list coloring without bicolored pairs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoColoring(ListColoring);

impl TwoColoring {
    pub fn new(c: ListColoring) -> Result<Self> {
        if let Some(&(u, v)) = c.pairs_with(Label::RB).first() {
            return Err(Error::Precondition(format!(
                "pair ({u}, {v}) is bicolored in a strict coloring"
            )));
        }
        Ok(TwoColoring(c))
    }

    pub fn from_red_graph(red: &SmallGraph) -> TwoColoring {
        TwoColoring(ListColoring::from_red_graph(red))
    }

    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        if self.0.red[u] >> v & 1 == 1 {
            Color::Red
        } else {
            Color::Blue
        }
    }

    #[inline]
    pub fn row(&self, v: usize, c: Color) -> u64 {
        self.0.class_row(v, c)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.n
    }

    pub fn as_list(&self) -> &ListColoring {
        &self.0
    }

    pub fn into_list(self) -> ListColoring {
        self.0
    }

    pub fn swapped(&self) -> TwoColoring {
        TwoColoring(self.0.swapped())
    }
}

impl AsRef<ListColoring> for TwoColoring {
    fn as_ref(&self) -> &ListColoring {
        &self.0
    }
}
