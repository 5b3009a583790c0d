//! Simple undirected graphs on at most 64 vertices, one `u64` row per vertex.

mod embed;
mod iso;
mod named;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use embed::{contains, contains_using_edge, count_embeddings, for_each_embedding, pattern_order};
pub use iso::{invariant_hash, is_isomorphic};
pub use named::NamedGraph;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// Bit mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Undirected simple graph with bit-row adjacency.
///
/// Rows are kept symmetric and loop-free by every constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u64>,
}

/// Girth of a graph; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// True when no cycle is shorter than `len`.
    pub fn at_least(self, len: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= len,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(SmallGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_bits(n);
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in Bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(alloc::format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(SmallGraph { n, adj: rows })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor row of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complement(&self) -> SmallGraph {
        let all = low_bits(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !(1u64 << v))
            .collect();
        SmallGraph { n: self.n, adj }
    }

    /// Graph spanned by `edges` with isolated vertices dropped, relabeled
    /// in increasing order of the original indices.
    pub fn edge_induced(n: usize, edges: &[(usize, usize)]) -> Result<SmallGraph> {
        let mut present = 0u64;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            present |= 1u64 << u | 1u64 << v;
        }
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, v) in Bits(present).enumerate() {
            index[v] = i;
        }
        let mut g = SmallGraph::empty(present.count_ones() as usize)?;
        for &(u, v) in edges {
            g.add_edge(index[u], index[v])?;
        }
        Ok(g)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SmallGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1u64 << perm[v];
            adj[perm[v]] |= 1u64 << perm[u];
        }
        SmallGraph { n: self.n, adj }
    }

    /// Disjoint union, with `other`'s vertices shifted after `self`'s.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let mut g = SmallGraph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Length of a shortest cycle, by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        best = best.min(dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Checks the representation invariants: symmetric rows, no loops,
    /// nothing outside the vertex range.
    pub fn is_well_formed(&self) -> bool {
        let mask = low_bits(self.n);
        self.adj.len() == self.n
            && self
                .adj
                .iter()
                .enumerate()
                .all(|(v, &row)| row & !mask == 0 && row >> v & 1 == 0 && Bits(row).all(|u| self.adj[u] >> v & 1 == 1))
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn girth_of_cycles() {
        for m in 3..=20 {
            let c = NamedGraph::Cycle(m).build().unwrap();
            assert_eq!(c.girth(), Girth::Finite(m), "C{m}");
        }
    }

    #[test]
    fn girth_of_forests_is_infinite() {
        assert_eq!(NamedGraph::Path(4).build().unwrap().girth(), Girth::Infinite);
        assert_eq!(SmallGraph::empty(7).unwrap().girth(), Girth::Infinite);
        let lf = NamedGraph::LinearForest(vec![3, 1, 1]).build().unwrap();
        assert_eq!(lf.girth(), Girth::Infinite);
    }

    #[test]
    fn girth_small_examples() {
        assert_eq!(NamedGraph::Diamond.build().unwrap().girth(), Girth::Finite(3));
        assert_eq!(NamedGraph::FourPan.build().unwrap().girth(), Girth::Finite(4));
        // Petersen graph has girth 5.
        let mut p = SmallGraph::empty(10).unwrap();
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5).unwrap();
            p.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
            p.add_edge(i, i + 5).unwrap();
        }
        assert_eq!(p.girth(), Girth::Finite(5));
        // Heawood graph has girth 6.
        let mut h = SmallGraph::empty(14).unwrap();
        for i in 0..14 {
            h.add_edge(i, (i + 1) % 14).unwrap();
            if i % 2 == 0 {
                h.add_edge(i, (i + 5) % 14).unwrap();
            }
        }
        assert_eq!(h.girth(), Girth::Finite(6));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SmallGraph::empty(65).is_err());
        let mut g = SmallGraph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert!(g.add_edge(0, 3).is_err());
        assert!(SmallGraph::from_rows(vec![0b10, 0]).is_err());
        assert!(SmallGraph::from_rows(vec![0b1]).is_err());
    }

    #[test]
    fn complete_and_complement() {
        let k = SmallGraph::complete(64).unwrap();
        assert_eq!(k.edge_count(), 2016);
        assert!(k.is_well_formed());
        assert_eq!(k.complement().edge_count(), 0);
        let c5 = NamedGraph::Cycle(5).build().unwrap();
        assert!(is_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn edge_induced_drops_isolates() {
        let g = SmallGraph::edge_induced(9, &[(2, 7), (7, 8)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_list(), vec![(0, 1), (1, 2)]);
    }
}
