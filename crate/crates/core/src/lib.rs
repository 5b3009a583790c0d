//! Balanced copies of graphs in 2-list edge colorings of complete graphs.
//!
//! Every edge of `K_n` carries a nonempty list drawn from `{r, b}`. A copy
//! of a target graph is *balanced* when its edges can be split into a red
//! part and a blue part, each drawn from the matching color class, whose
//! sizes differ by at most one. This crate holds the algorithmic core:
//!
//! - [`graph`]: word-packed simple graphs on at most 64 vertices,
//! - [`coloring`]: the list-coloring data model and class accounting,
//! - [`search`]: the generic pruned finder for balanced copies,
//! - [`extremal`]: half-edge families and exact Turán numbers,
//! - [`constructions`]: the explicit extremal and pattern colorings,
//! - [`engines`]: constructive finders that follow the cycle arguments,
//! - [`oracle`]: exhaustive `bal` / `lbal` computation at tiny `n`,
//! - [`formulas`]: closed-form bounds, evaluated exactly,
//! - [`claims`]: seeded per-trial checks driven by the verifier.
//!
//! The crate is `no_std` (it needs `alloc`); IO, parallel drivers and the
//! command line live in the `balance-lab` companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod claims;
pub mod coloring;
pub mod constructions;
pub mod engines;
mod error;
pub mod extremal;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod sampling;
pub mod search;

pub use coloring::{Color, ColorStats, Label, ListColoring, TwoColoring};
pub use error::{Error, Result};
pub use graph::{Girth, NamedGraph, SmallGraph};
pub use search::{find_balanced_copy, verify_witness, BalancedWitness};

/// `n choose 2`.
#[inline]
pub const fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
