use std::ops::ControlFlow;

use balance_core::constructions::{k5_coloring, split_coloring_c4k};
use balance_core::engines::{find_balanced_c4k, find_balanced_c4k2};
use balance_core::extremal::{ex_exact, girth6_graph, half_family, FamilySpec};
use balance_core::formulas::{c4k_bounds, structural_upper_bound};
use balance_core::graph::{count_embeddings, for_each_embedding};
use balance_core::oracle::lbal_exact;
use balance_core::sampling::{sample_excess_coloring, sample_two_coloring_above, trial_rng, trial_seed};
use balance_core::{find_balanced_copy, verify_witness, Color, Label, ListColoring, NamedGraph, SmallGraph};
use num_rational::Ratio;

fn named(s: &str) -> SmallGraph {
    s.parse::<NamedGraph>().unwrap().build().unwrap()
}

#[test]
fn c4k2_engine_agrees_with_generic_finder_on_k20() {
    let c6 = named("c6");
    let mut engine_hits = 0;
    for i in 0..1000 {
        let c = sample_excess_coloring(20, 1, &mut trial_rng(trial_seed(2024, i))).unwrap();
        let engine = find_balanced_c4k2(&c, 1).unwrap();
        let generic = find_balanced_copy(&c, &c6);
        assert_eq!(engine.is_some(), generic.is_some(), "trial {i}");
        if let Some(out) = engine {
            assert!(verify_witness(&c, &out.target, &out.witness));
            engine_hits += 1;
        }
        if let Some(w) = generic {
            assert!(verify_witness(&c, &c6, &w));
        }
    }
    assert_eq!(engine_hits, 1000);
}

#[test]
fn c4k_engine_above_the_upper_bound() {
    let (_, upper) = c4k_bounds(20, 2).unwrap();
    let c8 = named("c8");
    for i in 0..20 {
        let c = sample_two_coloring_above(20, upper as usize + 1, &mut trial_rng(trial_seed(7, i))).unwrap();
        let out = find_balanced_c4k(&c, 2).unwrap().expect("balanced C8");
        assert!(verify_witness(c.as_list(), &c8, &out.witness));
    }
}

#[test]
fn split_coloring_copies_have_few_red_edges() {
    for n in 8..=12 {
        let c = split_coloring_c4k(n, 2).unwrap();
        let host = SmallGraph::complete(n).unwrap();
        let c8 = named("c8");
        let edges = c8.edge_list();
        let mut most = 0;
        for_each_embedding(&host, &c8, |m| {
            let red = edges.iter().filter(|&&(a, b)| c.label(m[a], m[b]) == Label::R).count();
            most = most.max(red);
            ControlFlow::Continue(())
        });
        assert!(most <= 2, "n={n}: {most} red edges");
        assert!(find_balanced_c4k(&balance_core::TwoColoring::new(c).unwrap(), 2)
            .unwrap()
            .is_none());
    }
}

/// Every 5-set, counted by hand: balanced means exactly 5 of the 10 edges
/// can be red, so `r_only <= 5 <= r_only + rb` and the same for blue.
fn some_k5_is_balanced(c: &ListColoring) -> bool {
    let n = c.vertex_count();
    let mut set = [0usize; 5];
    fn go(c: &ListColoring, n: usize, set: &mut [usize; 5], depth: usize, from: usize) -> bool {
        if depth == 5 {
            let (mut r, mut b) = (0, 0);
            for i in 0..5 {
                for j in i + 1..5 {
                    r += c.allows(set[i], set[j], Color::Red) as usize;
                    b += c.allows(set[i], set[j], Color::Blue) as usize;
                }
            }
            return r >= 5 && b >= 5;
        }
        (from..n).any(|v| {
            set[depth] = v;
            go(c, n, set, depth + 1, v + 1)
        })
    }
    go(c, n, &mut set, 0, 0)
}

#[test]
fn k5_construction_has_no_balanced_clique() {
    for (n, eps) in [(20, 0.5), (30, 0.5), (40, 0.5), (40, 0.1)] {
        let k = k5_coloring(n, eps, 1).unwrap();
        assert!(!some_k5_is_balanced(&k.coloring), "n={n}");
        let h = k.coloring.bicolored_graph();
        assert!(h.girth().at_least(6));
        let y_start = n - k.params.k_prime;
        assert!(h.edges().all(|(u, _)| u >= y_start));
    }
}

#[test]
fn half_family_members_are_spanning_halves() {
    for g in ["k5", "c6", "c10", "k4", "diamond", "bull"].map(named) {
        let fam = half_family(&g).unwrap();
        let half = g.edge_count() / 2;
        for h in fam.members() {
            assert_eq!(h.edge_count(), half);
            assert!(h.min_degree() >= 1);
            assert!(count_embeddings(&g, h) > 0);
        }
    }
}

#[test]
fn turan_numbers_increase_and_fit_the_envelope() {
    let f = FamilySpec::short_cycles();
    let half = half_family(&named("k5")).unwrap();
    let mut prev = 0;
    for n in 5..=10 {
        let ex = ex_exact(n, &f).unwrap().value;
        assert!(ex > prev, "n={n}");
        prev = ex;
        if n <= 9 {
            assert_eq!(ex, ex_exact(n, &half).unwrap().value);
        }
        // (1+δ)·n^{3/2}/(2√2) with δ = 1 leaves room for small-n effects.
        let envelope = 2.0 * (n as f64).powf(1.5) / (2.0 * 2f64.sqrt());
        assert!((ex as f64) <= envelope, "n={n}: {ex} > {envelope}");
    }
}

#[test]
fn girth6_generator_examples() {
    let c6 = girth6_graph(6, 6, 3).unwrap().unwrap();
    assert!(c6.edge_count() >= 6 && c6.girth().at_least(6));
    assert!(girth6_graph(5, 5, 3).unwrap().is_none());
    let ex10 = ex_exact(10, &FamilySpec::short_cycles()).unwrap().value;
    assert!(ex10 >= 10);
    let g = girth6_graph(10, 10, 3).unwrap().unwrap();
    assert!(g.edge_count() >= 10 && g.girth().at_least(6));
}

#[test]
fn structural_bound_dominates_lbal_k5() {
    let n = 5;
    let ex = ex_exact(n, &half_family(&named("k5")).unwrap()).unwrap().value;
    let lbal = lbal_exact(n, &named("k5")).unwrap().value;
    assert!(structural_upper_bound(n, ex) >= Ratio::from_integer(lbal as i64));
}
