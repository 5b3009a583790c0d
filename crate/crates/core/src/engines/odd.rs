//! Odd cycles and balanced paths convert into each other: closing a path
//! with equal color counts tips the balance by exactly one, whatever the
//! closing color, and dropping a majority edge from a balanced odd cycle
//! evens the counts.

use alloc::format;
use alloc::vec::Vec;

use super::{checked_cycle, cycle_colors, fallback, EngineOutcome, Route};
use crate::coloring::{Color, TwoColoring};
use crate::error::{Error, Result};
use crate::graph::NamedGraph;
use crate::search::find_balanced_copy;

fn distinct(vs: &[usize], n: usize) -> bool {
    let mut seen = 0u64;
    vs.iter().all(|&v| {
        let fresh = v < n && seen >> v & 1 == 0;
        seen |= 1u64 << v.min(63);
        fresh
    })
}

/// Closes the balanced path `path` (vertex sequence with an even, positive
/// number of edges) into an odd cycle.
pub fn odd_cycle_from_path(c: &TwoColoring, path: &[usize]) -> Result<EngineOutcome> {
    let edges = path.len().saturating_sub(1);
    if edges < 2 || edges % 2 == 1 || !distinct(path, c.vertex_count()) {
        return Err(Error::Precondition(format!(
            "expected a path with an even number (>= 2) of edges on distinct vertices, got {edges} edges"
        )));
    }
    let red = path.windows(2).filter(|w| c.color(w[0], w[1]) == Color::Red).count();
    if 2 * red != edges {
        return Err(Error::Precondition(format!(
            "path is not balanced: {red} red of {edges} edges"
        )));
    }
    let colors = cycle_colors(c, path);
    checked_cycle(c.as_list(), path, &colors, Route::ClosedPath, None)
        .ok_or_else(|| Error::Precondition("closed cycle failed verification".into()))
}

/// Removes the first majority-color edge of the balanced odd cycle `cycle`,
/// returning the path that starts just after it.
pub fn path_from_odd_cycle(c: &TwoColoring, cycle: &[usize]) -> Result<Vec<usize>> {
    let m = cycle.len();
    if m < 3 || !distinct(cycle, c.vertex_count()) {
        return Err(Error::Precondition(
            "expected a cycle on at least 3 distinct vertices".into(),
        ));
    }
    let colors = cycle_colors(c, cycle);
    let red = colors.iter().filter(|&&col| col == Color::Red).count();
    let blue = m - red;
    if red.abs_diff(blue) != 1 {
        return Err(Error::Precondition(format!(
            "cycle counts must differ by exactly one, got {red} red, {blue} blue"
        )));
    }
    let major = if red > blue { Color::Red } else { Color::Blue };
    let i = colors
        .iter()
        .position(|&col| col == major)
        .expect("majority color present");
    Ok((1..=m).map(|j| cycle[(i + j) % m]).collect())
}

/// Balanced `C_{4k+alpha}`: a balanced path of length `4k+alpha-1` from the
/// generic search, closed up.
pub fn find_balanced_odd_cycle(c: &TwoColoring, k: usize, alpha: i64) -> Result<Option<EngineOutcome>> {
    if k == 0 || (alpha != 1 && alpha != -1) {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and alpha = +-1, got k = {k}, alpha = {alpha}"
        )));
    }
    let len = (4 * k as i64 + alpha) as usize;
    let path = NamedGraph::Path(len - 1).build()?;
    if let Some(w) = find_balanced_copy(c.as_list(), &path) {
        return odd_cycle_from_path(c, &w.mapping).map(Some);
    }
    Ok(fallback(c.as_list(), NamedGraph::Cycle(len).build()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::ListColoring;
    use crate::constructions::single_edge_coloring;
    use crate::graph::SmallGraph;

    fn from_red(n: usize, red: &[(usize, usize)]) -> TwoColoring {
        TwoColoring::from_red_graph(&SmallGraph::from_edges(n, red).unwrap())
    }

    #[test]
    fn closing_either_color_is_balanced() {
        // Path 0-1-2-3-4 with colors r r b b.
        let mut red = vec![(0, 1), (1, 2)];
        let c = from_red(5, &red);
        let out = odd_cycle_from_path(&c, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((out.witness.red_count(), out.witness.blue_count()), (2, 3));
        red.push((0, 4));
        let c = from_red(5, &red);
        let out = odd_cycle_from_path(&c, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((out.witness.red_count(), out.witness.blue_count()), (3, 2));
    }

    #[test]
    fn triangle_from_two_edges() {
        let c = from_red(3, &[(0, 1)]);
        let out = odd_cycle_from_path(&c, &[0, 1, 2]).unwrap();
        assert_eq!(out.target.edge_count(), 3);
    }

    #[test]
    fn rejects_unbalanced_paths() {
        let c = from_red(5, &[(0, 1)]);
        assert!(odd_cycle_from_path(&c, &[0, 1, 2, 3, 4]).is_err());
        assert!(odd_cycle_from_path(&c, &[0, 1, 2, 1, 4]).is_err());
        assert!(odd_cycle_from_path(&c, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn majority_edge_removal() {
        // C7 with 4 red, 3 blue.
        let c = from_red(7, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let cycle: Vec<usize> = (0..7).collect();
        let p = path_from_odd_cycle(&c, &cycle).unwrap();
        assert_eq!(p.len(), 7);
        let red = p.windows(2).filter(|w| c.color(w[0], w[1]) == Color::Red).count();
        assert_eq!(red, 3);
        let back = odd_cycle_from_path(&c, &p).unwrap();
        assert_eq!(back.target.edge_count(), 7);

        let c = from_red(3, &[(0, 1), (1, 2)]);
        assert_eq!(path_from_odd_cycle(&c, &[0, 1, 2]).unwrap().len(), 3);
        let even = from_red(4, &[(0, 1), (1, 2)]);
        assert!(path_from_odd_cycle(&even, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn single_red_edge_blocks_c5() {
        let c = TwoColoring::new(single_edge_coloring(9).unwrap()).unwrap();
        assert!(find_balanced_odd_cycle(&c, 1, 1).unwrap().is_none());
        let all_red = ListColoring::uniform(4, crate::coloring::Label::R).unwrap();
        let c = TwoColoring::new(all_red).unwrap();
        assert!(find_balanced_odd_cycle(&c, 1, -1).unwrap().is_none());
    }
}
