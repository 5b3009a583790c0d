//! Constructive finders for balanced cycles. Each one walks a fixed chain
//! of local constructions; every color it relies on is read from the
//! coloring, and a construction that does not apply falls through to the
//! next. When all fail, the generic search takes over and the result is
//! labeled [`Route::Fallback`]. Every returned witness is verified.

use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{Color, ListColoring, TwoColoring};
use crate::graph::SmallGraph;
use crate::search::{find_balanced_copy, verify_witness, BalancedWitness};

mod c4k;
mod c4k2;
mod odd;
mod pattern;

pub use c4k::{close_from_structure, find_balanced_c4k, one_vertex_detour, two_vertex_detour, CycleScaffold};
pub use c4k2::find_balanced_c4k2;
pub use odd::{find_balanced_odd_cycle, odd_cycle_from_path, path_from_odd_cycle};
pub use pattern::{find_pattern, find_pattern_with_budget, PatternKind, PatternSearch, PatternWitness};

/// Which construction produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Odd cycle closed from a balanced path.
    ClosedPath,
    /// Type-A pattern.
    Case1,
    /// Type-B pattern, bicolored edge inside one half.
    Case2_1,
    /// Type-B pattern, bicolored edge across the halves.
    Case2_2,
    /// Type-B pattern, bicolored edge with one end in the pattern.
    Case3,
    /// Bicolored edge outside, with an endpoint joined to the pattern in the
    /// pattern's interior color.
    Case4_1,
    /// Bicolored edge outside, every edge to the pattern in the crossing color.
    Case4_2,
    /// One-vertex detour through a vertex attached to `u1` in the majority color.
    ClaimBB,
    /// One-vertex detour through a vertex attached to `u1` in the minority color.
    ClaimX,
    /// Two-vertex detour.
    ClaimXY,
    /// Majority path in the larger side closed by a minority zigzag.
    LargeSides,
    /// Minority zigzag, a cherry and a majority return path.
    Gluing,
    Fallback,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::ClosedPath => "closed-path",
            Route::Case1 => "case1",
            Route::Case2_1 => "case2.1",
            Route::Case2_2 => "case2.2",
            Route::Case3 => "case3",
            Route::Case4_1 => "case4.1",
            Route::Case4_2 => "case4.2",
            Route::ClaimBB => "claim-bb",
            Route::ClaimX => "claim-x",
            Route::ClaimXY => "claim-xy",
            Route::LargeSides => "large-sides",
            Route::Gluing => "gluing",
            Route::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verified witness together with its target and route.
#[derive(Clone, Debug)]
pub struct EngineOutcome {
    pub route: Route,
    pub target: SmallGraph,
    pub witness: BalancedWitness,
    pub pattern: Option<PatternWitness>,
}

/// Colors of the edges of the closed walk `cycle` under a 2-coloring.
pub(crate) fn cycle_colors(c: &TwoColoring, cycle: &[usize]) -> Vec<Color> {
    let m = cycle.len();
    (0..m).map(|i| c.color(cycle[i], cycle[(i + 1) % m])).collect()
}

/// Builds and verifies a cycle witness; `None` if the cycle is not a valid
/// balanced copy under `c`.
pub(crate) fn checked_cycle(
    c: &ListColoring,
    cycle: &[usize],
    colors: &[Color],
    route: Route,
    pattern: Option<PatternWitness>,
) -> Option<EngineOutcome> {
    if cycle.len() < 3 {
        return None;
    }
    let (target, witness) = BalancedWitness::from_cycle(cycle, colors);
    verify_witness(c, &target, &witness).then_some(EngineOutcome {
        route,
        target,
        witness,
        pattern,
    })
}

pub(crate) fn fallback(c: &ListColoring, target: SmallGraph) -> Option<EngineOutcome> {
    let witness = find_balanced_copy(c, &target)?;
    debug_assert!(verify_witness(c, &target, &witness));
    Some(EngineOutcome {
        route: Route::Fallback,
        target,
        witness,
        pattern: None,
    })
}

/// Hands out the lowest unused vertex of a set.
#[derive(Clone, Copy, Default)]
pub(crate) struct Picker {
    used: u64,
}

impl Picker {
    pub(crate) fn mark(&mut self, v: usize) {
        self.used |= 1u64 << v;
    }

    pub(crate) fn take(&mut self, set: &[usize]) -> Option<usize> {
        let v = set.iter().copied().find(|&v| self.used >> v & 1 == 0)?;
        self.mark(v);
        Some(v)
    }

    pub(crate) fn take_many(&mut self, set: &[usize], count: usize) -> Option<Vec<usize>> {
        (0..count).map(|_| self.take(set)).collect()
    }
}
