//! Labeled subgraph embeddings by backtracking over bit rows.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::{low_bits, Bits, SmallGraph};

/// Connectivity-first static vertex order: each next vertex has the most
/// neighbors among those already placed (ties: higher degree, then lower
/// index). `prefix` is placed first, verbatim.
pub fn pattern_order(g: &SmallGraph) -> Vec<usize> {
    order_from(g, &[])
}

pub(crate) fn order_from(g: &SmallGraph, prefix: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for &v in prefix {
        order.push(v);
        placed |= 1u64 << v;
    }
    while order.len() < n {
        let next = Bits(low_bits(n) & !placed)
            .max_by_key(|&v| {
                let back = (g.row(v) & placed).count_ones();
                (back, g.degree(v), core::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        order.push(next);
        placed |= 1u64 << next;
    }
    order
}

struct Embedder<'a> {
    host: &'a SmallGraph,
    order: Vec<usize>,
    /// For each position, the earlier positions' pattern vertices adjacent to it.
    back: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: u64,
    visits: usize,
}

impl<'a> Embedder<'a> {
    fn new(host: &'a SmallGraph, pattern: &SmallGraph, order: Vec<usize>) -> Self {
        let mut pos = vec![0; pattern.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| pattern.neighbors(v).filter(|&u| pos[u] < i).collect())
            .collect();
        Embedder {
            host,
            order,
            back,
            map: vec![usize::MAX; pattern.vertex_count()],
            used: 0,
            visits: 0,
        }
    }

    fn candidates(&self, depth: usize) -> u64 {
        let mut c = low_bits(self.host.vertex_count()) & !self.used;
        for &u in &self.back[depth] {
            c &= self.host.row(self.map[u]);
        }
        c
    }

    fn place(&mut self, depth: usize, h: usize) {
        self.map[self.order[depth]] = h;
        self.used |= 1u64 << h;
    }

    fn unplace(&mut self, depth: usize, h: usize) {
        self.map[self.order[depth]] = usize::MAX;
        self.used &= !(1u64 << h);
    }

    fn run<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            self.visits += 1;
            return visit(&self.map);
        }
        for h in Bits(self.candidates(depth)) {
            self.place(depth, h);
            let flow = self.run(depth + 1, visit);
            self.unplace(depth, h);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Visits every injective, edge-preserving map from `pattern` into `host`
/// exactly once. The slice passed to `visit` is indexed by pattern vertex.
/// Returns the number of maps visited; `visit` may stop the walk early by
/// returning `Break`.
pub fn for_each_embedding<F>(host: &SmallGraph, pattern: &SmallGraph, mut visit: F) -> usize
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if pattern.vertex_count() > host.vertex_count() {
        return 0;
    }
    let mut e = Embedder::new(host, pattern, pattern_order(pattern));
    let _ = e.run(0, &mut visit);
    e.visits
}

pub fn count_embeddings(host: &SmallGraph, pattern: &SmallGraph) -> usize {
    for_each_embedding(host, pattern, |_| ControlFlow::Continue(()))
}

/// True when `host` has a (not necessarily induced) subgraph isomorphic to
/// `pattern`.
pub fn contains(host: &SmallGraph, pattern: &SmallGraph) -> bool {
    let mut found = false;
    for_each_embedding(host, pattern, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

/// True when some copy of `pattern` in `host` uses the host edge `uv`.
pub fn contains_using_edge(host: &SmallGraph, pattern: &SmallGraph, u: usize, v: usize) -> bool {
    if pattern.vertex_count() > host.vertex_count() || !host.has_edge(u, v) {
        return false;
    }
    let mut seen_orders: Vec<(usize, usize)> = Vec::new();
    for (a, b) in pattern.edges() {
        // Seeding (a, b) and (b, a) covers both orientations of the host edge.
        for (pa, pb) in [(a, b), (b, a)] {
            if seen_orders.contains(&(pa, pb)) {
                continue;
            }
            seen_orders.push((pa, pb));
            let order = order_from(pattern, &[pa, pb]);
            let mut e = Embedder::new(host, pattern, order);
            e.place(0, u);
            e.place(1, v);
            let mut found = false;
            let _ = e.run(2, &mut |_: &[usize]| {
                found = true;
                ControlFlow::Break(())
            });
            if found {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> SmallGraph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    #[test]
    fn order_is_connected_first() {
        let c6 = named("c6");
        let order = pattern_order(&c6);
        for (i, &v) in order.iter().enumerate().skip(1) {
            assert!(order[..i].iter().any(|&u| c6.has_edge(u, v)));
        }
    }

    #[test]
    fn cycle_into_complete_graph() {
        // 12 distinct 5-cycles in K5, each with 10 labelings.
        assert_eq!(count_embeddings(&named("k5"), &named("c5")), 120);
    }

    #[test]
    fn too_large_pattern_has_no_embeddings() {
        assert_eq!(count_embeddings(&named("k4"), &named("k5")), 0);
    }

    #[test]
    fn path_into_cycle() {
        // Six centers, two orientations each.
        assert_eq!(count_embeddings(&named("c6"), &named("p2")), 12);
    }

    #[test]
    fn early_abort_stops_the_walk() {
        let visits = for_each_embedding(&named("k6"), &named("c4"), |_| ControlFlow::Break(()));
        assert_eq!(visits, 1);
    }

    #[test]
    fn seeded_containment() {
        // Triangle 0-1-2 plus a pendant 2-3: only triangle edges lie on a C3.
        let g = SmallGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c3 = named("c3");
        assert!(contains_using_edge(&g, &c3, 0, 1));
        assert!(contains_using_edge(&g, &c3, 2, 0));
        assert!(!contains_using_edge(&g, &c3, 2, 3));
        assert!(!contains_using_edge(&g, &c3, 1, 3));
        assert!(contains(&g, &c3));
        assert!(!contains(&g, &named("c4")));
    }
}
