//! Seed expansion and random colorings with prescribed class sizes.
//!
//! A root seed expands into per-trial seeds with the splitmix64 output
//! function: trial `i` gets `mix(root + (i + 1) * γ)` with
//! `γ = 0x9E3779B97F4A7C15`. Each trial then drives its own
//! `ChaCha8Rng::seed_from_u64(trial_seed)`, so a report depends only on the
//! root seed and never on how trials are scheduled.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::{Label, ListColoring, TwoColoring};
use crate::error::{Error, Result};

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `index` under `root`.
pub fn trial_seed(root: u64, index: u64) -> u64 {
    splitmix64(root.wrapping_add(index.wrapping_add(1).wrapping_mul(GAMMA)))
}

pub fn trial_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform list coloring of `K_n` with exactly `red_only` red-only,
/// `blue_only` blue-only and `bicolored` bicolored pairs.
pub fn random_list_coloring<R: Rng + ?Sized>(
    n: usize,
    red_only: usize,
    blue_only: usize,
    bicolored: usize,
    rng: &mut R,
) -> Result<ListColoring> {
    let total = crate::choose2(n);
    if red_only + blue_only + bicolored != total {
        return Err(Error::InvalidParameter(format!(
            "label counts {red_only} + {blue_only} + {bicolored} do not sum to binom({n}, 2) = {total}"
        )));
    }
    // A uniform ordering of the pairs: the first `bicolored` get both
    // colors, the next `red_only` get red.
    let order = sample(rng, total, total).into_vec();
    let mut labels = Vec::with_capacity(total);
    labels.resize(total, Label::B);
    for (rank, &pair) in order.iter().enumerate() {
        if rank < bicolored {
            labels[pair] = Label::RB;
        } else if rank < bicolored + red_only {
            labels[pair] = Label::R;
        }
    }
    let mut next = labels.into_iter();
    ListColoring::from_fn(n, |_, _| next.next().expect("one label per pair"))
}

/// Uniform strict 2-coloring of `K_n` with exactly `red` red pairs.
pub fn random_two_coloring<R: Rng + ?Sized>(n: usize, red: usize, rng: &mut R) -> Result<TwoColoring> {
    let total = crate::choose2(n);
    if red > total {
        return Err(Error::InvalidParameter(format!(
            "{red} red pairs exceed binom({n}, 2) = {total}"
        )));
    }
    TwoColoring::new(random_list_coloring(n, red, total - red, 0, rng)?)
}

/// Strict 2-coloring with both classes of size at least `min_class`: the
/// red size is drawn uniformly from the admissible range, then the red set
/// uniformly among sets of that size.
pub fn sample_two_coloring_above<R: Rng + ?Sized>(n: usize, min_class: usize, rng: &mut R) -> Result<TwoColoring> {
    let total = crate::choose2(n);
    if 2 * min_class > total {
        return Err(Error::Precondition(format!(
            "both classes of size >= {min_class} need 2 * {min_class} <= binom({n}, 2) = {total}"
        )));
    }
    let red = rng.gen_range(min_class..=total - min_class);
    random_two_coloring(n, red, rng)
}

/// List coloring whose list-color excess is exactly `excess`: both classes
/// have size `ceil(C(n,2)/2) + excess`, which takes `2 * excess` bicolored
/// pairs (one more when `C(n,2)` is odd).
pub fn sample_excess_coloring<R: Rng + ?Sized>(n: usize, excess: usize, rng: &mut R) -> Result<ListColoring> {
    let total = crate::choose2(n);
    let class = total.div_ceil(2) + excess;
    if class > total {
        return Err(Error::Precondition(format!(
            "excess {excess} is impossible for n = {n}"
        )));
    }
    let bicolored = 2 * class - total;
    random_list_coloring(n, class - bicolored, class - bicolored, bicolored, rng)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs of splitmix64 seeded with 0.
        assert_eq!(trial_seed(0, 0), 0xE220_A839_7B1D_CDAF);
        assert_eq!(trial_seed(0, 1), 0x6E78_9E6A_A1B9_65F4);
        assert_ne!(trial_seed(42, 0), trial_seed(43, 0));
    }

    #[test]
    fn counts_are_exact() {
        let mut rng = trial_rng(7);
        let c = random_list_coloring(10, 20, 15, 10, &mut rng).unwrap();
        let s = c.stats();
        assert_eq!((s.red_size, s.blue_size, s.bicolored), (30, 25, 10));
        assert!(random_list_coloring(10, 20, 15, 9, &mut rng).is_err());
    }

    #[test]
    fn excess_sampling() {
        let mut rng = trial_rng(1);
        let c = sample_excess_coloring(20, 1, &mut rng).unwrap();
        let s = c.stats();
        assert_eq!((s.red_size, s.blue_size, s.bicolored), (96, 96, 2));
        assert_eq!(s.list_color_excess(), 1);
        // binom(7,2) = 21 is odd.
        let s = sample_excess_coloring(7, 1, &mut rng).unwrap().stats();
        assert_eq!((s.red_size, s.blue_size, s.bicolored), (12, 12, 3));
        assert_eq!(s.list_color_excess(), 1);
    }

    #[test]
    fn two_coloring_range() {
        let mut rng = trial_rng(3);
        for _ in 0..50 {
            let s = sample_two_coloring_above(6, 2, &mut rng).unwrap().as_list().stats();
            assert!(s.min_class() >= 2);
        }
        assert!(sample_two_coloring_above(4, 4, &mut rng).is_err());
    }

    #[test]
    fn same_seed_same_coloring() {
        let a = sample_excess_coloring(12, 2, &mut trial_rng(99)).unwrap();
        let b = sample_excess_coloring(12, 2, &mut trial_rng(99)).unwrap();
        assert_eq!(a, b);
    }
}
