//! Explicit colorings: the extremal colorings for `C_{4k}` and `K_5`, the
//! planted clique patterns, and a one-red-edge fixture. Vertex sets are
//! always the lowest-numbered vertices that fit.

use alloc::format;
use alloc::vec::Vec;

use crate::coloring::{Label, ListColoring};
use crate::error::{Error, Result};
use crate::extremal::{girth6_best, GeneratorBudget};
use crate::formulas::k5_bounds;
use crate::graph::SmallGraph;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            cap: crate::graph::MAX_VERTICES,
        });
    }
    Ok(())
}

/// `V_1 = {0..k-2}`; every `V_1`-to-rest edge red-only, all others blue-only.
/// `|R| = (k-1)(n-k+1)` and no copy of `C_{4k}` is balanced.
pub fn split_coloring_c4k(n: usize, k: usize) -> Result<ListColoring> {
    check_n(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if n < 4 * k {
        return Err(Error::Precondition(format!("n >= 4k fails: n = {n}, 4k = {}", 4 * k)));
    }
    let v1 = k - 1;
    ListColoring::from_fn(n, |u, v| if (u < v1) != (v < v1) { Label::R } else { Label::B })
}

/// Red-only clique on `{0..a-1}`, everything else blue-only.
pub fn clique_split_coloring(n: usize, a: usize) -> Result<ListColoring> {
    check_n(n)?;
    if a > n {
        return Err(Error::InvalidParameter(format!("clique size {a} exceeds n = {n}")));
    }
    ListColoring::from_fn(n, |u, v| if u < a && v < a { Label::R } else { Label::B })
}

/// `X = {0..t-1}`, `Y = {t..2t-1}` with red-only interiors; all other edges
/// blue-only; then each pair in `rb` becomes bicolored.
pub fn type_b_coloring(n: usize, t: usize, rb: &[(usize, usize)]) -> Result<ListColoring> {
    check_n(n)?;
    if 2 * t > n {
        return Err(Error::Precondition(format!("2t <= n fails: t = {t}, n = {n}")));
    }
    let side = |v: usize| {
        if v < t {
            Some(0)
        } else if v < 2 * t {
            Some(1)
        } else {
            None
        }
    };
    let mut c = ListColoring::from_fn(n, |u, v| match (side(u), side(v)) {
        (Some(a), Some(b)) if a == b => Label::R,
        _ => Label::B,
    })?;
    for &(u, v) in rb {
        c.try_set(u, v, Label::RB)?;
    }
    Ok(c)
}

/// Exactly the edge `{0, 1}` red-only; all others blue-only.
pub fn single_edge_coloring(n: usize) -> Result<ListColoring> {
    check_n(n)?;
    if n < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    ListColoring::from_fn(n, |u, v| {
        if (u.min(v), u.max(v)) == (0, 1) {
            Label::R
        } else {
            Label::B
        }
    })
}

/// Parameters of the `K_5` construction for given `n` and `ε`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct K5Params {
    pub n: usize,
    pub epsilon: f64,
    /// `1 - 1/√2`.
    pub alpha: f64,
    /// `(1 - ε/2)(α/2)^{3/2}`.
    pub beta: f64,
    /// `⌈αn⌉`: order of the bicolored girth-6 graph.
    pub k: usize,
    /// `⌈αn + β√n⌉`: size of `Y`.
    pub k_prime: usize,
    /// `⌊βn^{3/2}⌋`: wanted number of bicolored edges.
    pub m: usize,
}

impl K5Params {
    pub fn new(n: usize, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        let nf = n as f64;
        let alpha = 1.0 - 1.0 / libm::sqrt(2.0);
        let beta = (1.0 - epsilon / 2.0) * libm::pow(alpha / 2.0, 1.5);
        let k = libm::ceil(alpha * nf) as usize;
        let k_prime = libm::ceil(alpha * nf + beta * libm::sqrt(nf)) as usize;
        let m = libm::floor(beta * libm::pow(nf, 1.5)) as usize;
        if k_prime > n {
            return Err(Error::Precondition(format!("k' <= n fails: k' = {k_prime}, n = {n}")));
        }
        Ok(K5Params {
            n,
            epsilon,
            alpha,
            beta,
            k,
            k_prime,
            m,
        })
    }
}

/// The `K_5` list coloring together with what the generator achieved.
#[derive(Clone, Debug)]
pub struct K5Construction {
    pub coloring: ListColoring,
    pub params: K5Params,
    /// Bicolored edges actually placed (the girth-6 graph's size).
    pub achieved_m: usize,
    /// The girth-6 graph `H`, on host vertices `n-k'..n-k'+k-1`.
    pub h: SmallGraph,
    pub red_size: usize,
    pub blue_size: usize,
    /// `½C(n,2) + (1-ε)c·n^{3/2}`.
    pub class_bound: f64,
    /// Both class sizes reach `class_bound`.
    pub bound_met: bool,
}

impl K5Construction {
    /// The generator placed no bicolored edges at all.
    pub fn degenerate(&self) -> bool {
        self.achieved_m == 0
    }
}

/// `X = {0..n-k'-1}` with red-only interior; `Y` the remaining `k'` vertices.
/// A girth-6 graph on the first `k` vertices of `Y` is bicolored; every
/// other edge is blue-only. The generator is seeded with `seed`.
pub fn k5_coloring(n: usize, epsilon: f64, seed: u64) -> Result<K5Construction> {
    check_n(n)?;
    let params = K5Params::new(n, epsilon)?;
    let h = girth6_best(params.k, params.m, seed, GeneratorBudget::default())?;
    // Only m edges are asked for; drop extras from the end of the edge list.
    let keep: Vec<(usize, usize)> = h.edge_list().into_iter().take(params.m).collect();
    let h = SmallGraph::from_edges(params.k, &keep)?;
    let x = n - params.k_prime;
    let mut coloring = ListColoring::from_fn(n, |u, v| if u < x && v < x { Label::R } else { Label::B })?;
    for (a, b) in h.edges() {
        coloring.set(x + a, x + b, Label::RB);
    }
    let stats = coloring.stats();
    let class_bound = k5_bounds(n, epsilon)?.0;
    let bound_met = stats.red_size as f64 >= class_bound && stats.blue_size as f64 >= class_bound;
    Ok(K5Construction {
        achieved_m: h.edge_count(),
        coloring,
        params,
        h,
        red_size: stats.red_size,
        blue_size: stats.blue_size,
        class_bound,
        bound_met,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choose2;

    #[test]
    fn split_sizes() {
        assert_eq!(split_coloring_c4k(12, 2).unwrap().stats().red_size, 11);
        assert_eq!(split_coloring_c4k(8, 2).unwrap().stats().red_size, 7);
        assert_eq!(split_coloring_c4k(12, 3).unwrap().stats().red_size, 20);
        assert_eq!(split_coloring_c4k(4, 1).unwrap().stats().red_size, 0);
        assert!(split_coloring_c4k(7, 2).is_err());
    }

    #[test]
    fn clique_and_type_b() {
        let c = clique_split_coloring(8, 4).unwrap();
        assert_eq!(c.stats().red_size, 6);
        assert_eq!(clique_split_coloring(8, 0).unwrap().stats().red_size, 0);
        let b = type_b_coloring(8, 4, &[(0, 1), (2, 5)]).unwrap();
        let s = b.stats();
        assert_eq!((s.red_size, s.bicolored), (13, 2));
        assert_eq!(b.label(0, 1), Label::RB);
        assert_eq!(b.label(4, 7), Label::R);
        assert!(type_b_coloring(8, 4, &[(3, 3)]).is_err());
        assert!(type_b_coloring(8, 5, &[]).is_err());
    }

    #[test]
    fn single_edge() {
        let s = single_edge_coloring(9).unwrap().stats();
        assert_eq!((s.red_size, s.blue_size, s.bicolored), (1, 35, 0));
        assert_eq!(single_edge_coloring(2).unwrap().label(0, 1), Label::R);
    }

    #[test]
    fn k5_params_at_forty() {
        let p = K5Params::new(40, 0.5).unwrap();
        assert!((p.alpha - 0.2929).abs() < 1e-4);
        assert_eq!((p.k, p.k_prime, p.m), (12, 12, 10));
        assert!(K5Params::new(40, 0.0).is_err());
    }

    #[test]
    fn k5_coloring_layout() {
        let k = k5_coloring(40, 0.5, 0).unwrap();
        assert_eq!(k.achieved_m, 10);
        assert!(k.coloring.bicolored_graph().girth().at_least(6));
        let x = 40 - k.params.k_prime;
        for (u, v) in k.coloring.pairs_with(Label::RB) {
            assert!(u >= x && v >= x);
        }
        assert_eq!(k.red_size, choose2(x) + 10);
        assert!(!k.bound_met);
    }
}
