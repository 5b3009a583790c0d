//! Graphviz export. Red-only pairs are drawn red, blue-only blue and
//! bicolored purple; edges of a witness copy get `penwidth=2`.

use std::collections::HashSet;
use std::fmt::Write;

use balance_core::{BalancedWitness, Label, ListColoring, SmallGraph};

/// Host edges covered by a witness copy of `g`.
pub fn witness_edges(g: &SmallGraph, w: &BalancedWitness) -> Vec<(usize, usize)> {
    w.image_edges(g).into_iter().map(|(u, v, _)| (u, v)).collect()
}

/// DOT text for `c` with the host edges in `marked` drawn thick.
pub fn export_dot(c: &ListColoring, marked: &[(usize, usize)]) -> String {
    let marked: HashSet<(usize, usize)> = marked.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut out = String::from("graph coloring {\n  node [shape=circle];\n");
    for v in 0..c.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, l) in c.labeled_pairs() {
        let color = match l {
            Label::R => "red",
            Label::B => "blue",
            Label::RB => "purple",
        };
        if marked.contains(&(u, v)) {
            writeln!(out, "  {u} -- {v} [color={color}, penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v} [color={color}];").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
