use balance_core::engines::{
    find_balanced_c4k, find_balanced_c4k2, find_balanced_odd_cycle, odd_cycle_from_path, path_from_odd_cycle,
};
use balance_core::graph::{count_embeddings, is_isomorphic};
use balance_core::{
    choose2, find_balanced_copy, verify_witness, Color, Girth, Label, ListColoring, NamedGraph, SmallGraph, TwoColoring,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn named(s: &str) -> SmallGraph {
    s.parse::<NamedGraph>().unwrap().build().unwrap()
}

fn label() -> impl Strategy<Value = Label> {
    prop_oneof![Just(Label::R), Just(Label::B), Just(Label::RB)]
}

fn list_coloring(lo: usize, hi: usize) -> impl Strategy<Value = ListColoring> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(label(), choose2(n)).prop_map(move |ls| {
            let mut it = ls.into_iter();
            ListColoring::from_fn(n, |_, _| it.next().unwrap()).unwrap()
        })
    })
}

fn two_coloring(lo: usize, hi: usize) -> impl Strategy<Value = TwoColoring> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), choose2(n)).prop_map(move |bits| {
            let mut it = bits.into_iter();
            let c = ListColoring::from_fn(n, |_, _| if it.next().unwrap() { Label::R } else { Label::B }).unwrap();
            TwoColoring::new(c).unwrap()
        })
    })
}

fn graph(lo: usize, hi: usize) -> impl Strategy<Value = SmallGraph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), choose2(n)).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|p| p.1).map(|p| p.0).collect();
            SmallGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (SmallGraph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn target() -> impl Strategy<Value = SmallGraph> {
    prop::sample::select(vec!["c3", "c4", "c5", "p3", "k4", "diamond"]).prop_map(named)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn stats_identity(c in list_coloring(1, 12)) {
        let s = c.stats();
        let n = c.vertex_count();
        prop_assert_eq!(s.red_size + s.blue_size - s.bicolored, choose2(n));
        let excess = s.list_color_excess();
        if excess >= 1 {
            prop_assert!(s.bicolored as i64 >= 2 * excess);
        }
    }

    #[test]
    fn restriction_is_a_partition(c in list_coloring(3, 10), frac in 0.0f64..1.0) {
        let s = c.stats();
        let n = c.vertex_count();
        let top = s.min_class().min(choose2(n) / 2);
        prop_assume!(top >= 1);
        let k = ((top as f64 * frac) as usize).min(top - 1);
        let r = c.restrict_to_2coloring(k).unwrap();
        let l = r.as_list();
        prop_assert!(l.is_strict());
        prop_assert!(l.is_refinement_of(&c));
        let rs = l.stats();
        prop_assert!(rs.red_size > k && rs.blue_size > k);
    }

    #[test]
    fn fixing_bicolored_edges_is_even(c in list_coloring(2, 10)) {
        let f = c.fix_bicolored_balanced();
        let l = f.as_list();
        prop_assert!(l.is_strict() && l.is_refinement_of(&c));
        let s = c.stats();
        let (r_only, b_only) = (s.red_size - s.bicolored, s.blue_size - s.bicolored);
        let fs = l.stats();
        let (to_red, to_blue) = (fs.red_size - r_only, fs.blue_size - b_only);
        prop_assert_eq!(to_red + to_blue, s.bicolored);
        // As close to level as the bicolored edges allow.
        let gap = |r: usize, b: usize| r.abs_diff(b);
        let best = (0..=s.bicolored).map(|x| gap(r_only + x, b_only + s.bicolored - x)).min().unwrap();
        prop_assert_eq!(gap(fs.red_size, fs.blue_size), best);
    }

    #[test]
    fn witnesses_verify(c in list_coloring(3, 8), g in target()) {
        prop_assume!(g.vertex_count() <= c.vertex_count());
        if let Some(w) = find_balanced_copy(&c, &g) {
            prop_assert!(verify_witness(&c, &g, &w));
        }
    }

    #[test]
    fn enlarging_lists_keeps_copies(c in list_coloring(4, 8), g in target(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.vertex_count() <= c.vertex_count());
        prop_assume!(find_balanced_copy(&c, &g).is_some());
        let pairs: Vec<_> = c.labeled_pairs().filter(|p| p.2 != Label::RB).collect();
        prop_assume!(!pairs.is_empty());
        let (u, v, _) = pairs[pick.index(pairs.len())];
        let mut up = c.clone();
        up.set(u, v, Label::RB);
        prop_assert!(find_balanced_copy(&up, &g).is_some());
    }

    #[test]
    fn corrupted_witness_fails(c in list_coloring(5, 8)) {
        let g = named("c5");
        if let Some(mut w) = find_balanced_copy(&c, &g) {
            let edges = w.image_edges(&g);
            // Flip an edge whose list does not allow the other color, if any.
            if let Some(i) = edges.iter().position(|&(u, v, col)| !c.allows(u, v, col.other())) {
                w.assignment[i] = w.assignment[i].other();
                prop_assert!(!verify_witness(&c, &g, &w));
            }
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence((g, p) in graph_and_perm(1, 8), shift in 0usize..8) {
        prop_assert!(is_isomorphic(&g, &g));
        let h = g.permuted(&p);
        prop_assert!(is_isomorphic(&g, &h) && is_isomorphic(&h, &g));
        // A second relabeling of h is still isomorphic to g.
        let n = g.vertex_count();
        let mut p2: Vec<usize> = (0..n).collect();
        p2.rotate_left(shift % n);
        prop_assert!(is_isomorphic(&g, &h.permuted(&p2)));
    }

    #[test]
    fn isomorphism_agrees_with_embedding(a in graph(1, 6), b in graph(1, 6)) {
        let same = a.vertex_count() == b.vertex_count()
            && a.edge_count() == b.edge_count()
            && count_embeddings(&a, &b) > 0;
        prop_assert_eq!(is_isomorphic(&a, &b), same);
    }

    #[test]
    fn embeddings_match_brute_force(h in graph(1, 7), p in graph(1, 4)) {
        prop_assume!(p.vertex_count() <= h.vertex_count());
        let edges = p.edge_list();
        let k = p.vertex_count();
        let n = h.vertex_count();
        let mut naive = 0;
        let mut m = vec![0usize; k];
        let total = n.pow(k as u32);
        for code in 0..total {
            let mut r = code;
            for x in m.iter_mut() {
                *x = r % n;
                r /= n;
            }
            let injective = (0..k).all(|i| (0..i).all(|j| m[i] != m[j]));
            if injective && edges.iter().all(|&(a, b)| h.has_edge(m[a], m[b])) {
                naive += 1;
            }
        }
        prop_assert_eq!(count_embeddings(&h, &p), naive);
    }

    #[test]
    fn graphs_are_well_formed(g in graph(1, 12), subset in subsequence((0..12usize).collect::<Vec<_>>(), 0..12)) {
        prop_assert!(g.is_well_formed());
        prop_assert!(g.complement().is_well_formed());
        let n = g.vertex_count();
        let keep: Vec<_> = subset.into_iter().filter(|&v| v < n).collect();
        let edges: Vec<_> = g.edges().filter(|&(u, v)| keep.contains(&u) && keep.contains(&v)).collect();
        prop_assert!(SmallGraph::from_edges(n, &edges).unwrap().is_well_formed());
    }

    #[test]
    fn odd_engine_is_sound(c in two_coloring(6, 10), long in any::<bool>()) {
        let (k, alpha) = if long { (2, -1) } else { (1, 1) };
        if let Some(out) = find_balanced_odd_cycle(&c, k, alpha).unwrap() {
            prop_assert!(verify_witness(c.as_list(), &out.target, &out.witness));
            // Dropping a majority edge and closing again stays balanced.
            let path = path_from_odd_cycle(&c, &out.witness.mapping).unwrap();
            let again = odd_cycle_from_path(&c, &path).unwrap();
            prop_assert!(verify_witness(c.as_list(), &again.target, &again.witness));
        }
    }

    #[test]
    fn c4k_engine_is_sound(c in two_coloring(6, 11)) {
        let out = find_balanced_c4k(&c, 1).unwrap();
        let generic = find_balanced_copy(c.as_list(), &named("c4"));
        prop_assert_eq!(out.is_some(), generic.is_some());
        if let Some(out) = out {
            prop_assert!(verify_witness(c.as_list(), &out.target, &out.witness));
        }
    }

    #[test]
    fn c4k2_engine_is_sound(c in list_coloring(6, 10)) {
        let out = find_balanced_c4k2(&c, 1).unwrap();
        prop_assert_eq!(out.is_some(), find_balanced_copy(&c, &named("c6")).is_some());
        if let Some(out) = out {
            prop_assert!(verify_witness(&c, &out.target, &out.witness));
            prop_assert_eq!(out.witness.red_count().abs_diff(out.witness.blue_count()), 0);
        }
    }
}

#[test]
fn cycle_girths() {
    for m in 3..=20 {
        assert_eq!(NamedGraph::Cycle(m).build().unwrap().girth(), Girth::Finite(m));
    }
    assert_eq!(named("p4").girth(), Girth::Infinite);
    assert_eq!(named("diamond").girth(), Girth::Finite(3));
}

#[test]
fn color_swap_is_an_involution() {
    let c = ListColoring::from_fn(6, |u, v| [Label::R, Label::B, Label::RB][(u + 2 * v) % 3]).unwrap();
    assert_eq!(c.swapped().swapped(), c);
    let s = c.stats();
    let t = c.swapped().stats();
    assert_eq!((s.red_size, s.blue_size), (t.blue_size, t.red_size));
    assert!(c.allows(0, 1, Color::Red) == c.swapped().allows(0, 1, Color::Blue));
}
