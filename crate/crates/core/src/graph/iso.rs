//! Isomorphism testing: color refinement seeded with degree and triangle
//! counts, then backtracking inside color classes.

use alloc::vec;
use alloc::vec::Vec;

use super::{Bits, SmallGraph};

#[inline]
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[inline]
fn combine(h: u64, x: u64) -> u64 {
    mix(h.rotate_left(5) ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15))
}

fn distinct(colors: &[u64]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Stable refined coloring plus the number of rounds it took.
fn refined_colors(g: &SmallGraph) -> (Vec<u64>, usize) {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n)
        .map(|v| {
            let triangles: u32 = g.neighbors(v).map(|u| (g.row(u) & g.row(v)).count_ones()).sum();
            combine(g.degree(v) as u64, triangles as u64 / 2)
        })
        .collect();
    let mut classes = distinct(&colors);
    let mut rounds = 0;
    let mut scratch = Vec::with_capacity(n);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                scratch.clear();
                scratch.extend(g.neighbors(v).map(|u| colors[u]));
                scratch.sort_unstable();
                scratch.iter().fold(combine(0x51, colors[v]), |h, &c| combine(h, c))
            })
            .collect();
        let next_classes = distinct(&next);
        colors = next;
        rounds += 1;
        if next_classes == classes || rounds > n {
            return (colors, rounds);
        }
        classes = next_classes;
    }
}

/// Isomorphism invariant: equal for isomorphic graphs.
pub fn invariant_hash(g: &SmallGraph) -> u64 {
    let (mut colors, rounds) = refined_colors(g);
    colors.sort_unstable();
    let seed = combine(combine(g.vertex_count() as u64, g.edge_count() as u64), rounds as u64);
    colors.iter().fold(seed, |h, &c| combine(h, c))
}

/// True iff an edge-preserving bijection between `a` and `b` exists.
pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let (ca, ra) = refined_colors(a);
    let (cb, rb) = refined_colors(b);
    if ra != rb {
        return false;
    }
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }

    // Static order: smallest color class first, then most already-ordered neighbors.
    let class_size = |c: u64| ca.iter().filter(|&&x| x == c).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let back = (a.row(v) & placed).count_ones();
                (class_size(ca[v]), core::cmp::Reverse(back), v)
            })
            .expect("unplaced vertex");
        order.push(v);
        placed |= 1u64 << v;
    }
    let class_mask = |c: u64| -> u64 {
        cb.iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .fold(0u64, |m, (w, _)| m | 1u64 << w)
    };
    let masks: Vec<u64> = order.iter().map(|&v| class_mask(ca[v])).collect();

    let mut state = IsoSearch {
        a,
        b,
        order: &order,
        masks: &masks,
        map: vec![usize::MAX; n],
        used: 0,
        mapped: 0,
    };
    state.run(0)
}

struct IsoSearch<'a> {
    a: &'a SmallGraph,
    b: &'a SmallGraph,
    order: &'a [usize],
    masks: &'a [u64],
    map: Vec<usize>,
    used: u64,
    mapped: u64,
}

impl IsoSearch<'_> {
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let image_of_nbrs = Bits(self.a.row(x) & self.mapped).fold(0u64, |m, y| m | 1u64 << self.map[y]);
        for w in Bits(self.masks[depth] & !self.used) {
            if self.b.row(w) & self.used != image_of_nbrs {
                continue;
            }
            self.map[x] = w;
            self.used |= 1u64 << w;
            self.mapped |= 1u64 << x;
            if self.run(depth + 1) {
                return true;
            }
            self.map[x] = usize::MAX;
            self.used &= !(1u64 << w);
            self.mapped &= !(1u64 << x);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> SmallGraph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    #[test]
    fn distinguishes_family_members() {
        assert!(!is_isomorphic(&named("4pan"), &named("co4pan")));
        assert!(!is_isomorphic(&named("bull"), &named("cricket")));
    }

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c5 = named("c5");
        let r = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_ne!(c5, r);
        assert!(is_isomorphic(&c5, &r));
        assert_eq!(invariant_hash(&c5), invariant_hash(&r));
    }

    #[test]
    fn regular_graphs_with_equal_degrees() {
        let c6 = named("c6");
        let two_triangles = named("c3").disjoint_union(&named("c3")).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        // Two non-isomorphic 3-regular graphs on 8 vertices: cube vs. Wagner graph.
        let mut cube = SmallGraph::empty(8).unwrap();
        for v in 0..8usize {
            for bit in [1, 2, 4] {
                if v & bit == 0 {
                    cube.add_edge(v, v | bit).unwrap();
                }
            }
        }
        let mut wagner = SmallGraph::empty(8).unwrap();
        for v in 0..8 {
            wagner.add_edge(v, (v + 1) % 8).unwrap();
            if v < 4 {
                wagner.add_edge(v, v + 4).unwrap();
            }
        }
        assert!(!is_isomorphic(&cube, &wagner));
        assert!(is_isomorphic(&cube, &cube.permuted(&[7, 6, 5, 4, 3, 2, 1, 0])));
    }

    #[test]
    fn empty_graphs() {
        let e = SmallGraph::empty(10).unwrap();
        assert!(is_isomorphic(&e, &e.permuted(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0])));
        assert!(!is_isomorphic(&e, &SmallGraph::empty(9).unwrap()));
    }
}
