//! Exhaustive `bal` and `lbal` at tiny `n`.
//!
//! Both numbers are maxima of `min(|R|, |B|)` over colorings of `K_n` that
//! contain no balanced copy of the target: every coloring above the maximum
//! has a copy, and the maximizing coloring shows the threshold is tight.
//! When every coloring contains a copy the value is 0 and there is no
//! witness coloring.
//!
//! Colorings are numbered by codes over the pairs of `K_n` in lexicographic
//! order, pair `i` being the `i`-th digit. A strict coloring is a bit mask
//! (set bit = red). A list coloring is a base-3 number with digits
//! `0 = r`, `1 = b`, `2 = rb`. The scans work on arbitrary code ranges and
//! their partial results merge associatively, so callers can split the
//! space across workers; the merged result is the same for any split. Ties
//! go to the smallest code.

use alloc::format;
use alloc::vec;
use core::ops::Range;

use crate::coloring::{Label, ListColoring};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::search::find_balanced_copy;

/// Largest `C(n,2)` accepted by [`bal_exact`].
pub const BAL_PAIR_CAP: usize = 24;
/// Largest `C(n,2)` accepted by [`lbal_exact`].
pub const LBAL_PAIR_CAP: usize = 15;

/// Exact value with a coloring that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    /// A coloring without a balanced copy whose smaller class has size `value`.
    pub witness_coloring: Option<ListColoring>,
    /// Codes visited (for `bal`, only those with `|R| <= |B|`).
    pub colorings_examined: u64,
}

/// Result of scanning one range of codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct OraclePartial {
    /// Best value and smallest code attaining it.
    pub best: Option<(usize, u64)>,
    pub examined: u64,
}

impl OraclePartial {
    pub fn merge(self, other: OraclePartial) -> OraclePartial {
        let best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(if a.0 != b.0 {
                if a.0 > b.0 {
                    a
                } else {
                    b
                }
            } else {
                a.min(b)
            }),
            (a, b) => a.or(b),
        };
        OraclePartial {
            best,
            examined: self.examined + other.examined,
        }
    }

    fn offer(&mut self, value: usize, code: u64) {
        match self.best {
            Some((v, c)) if v > value || (v == value && c <= code) => {}
            _ => self.best = Some((value, code)),
        }
    }

    fn floor(&self) -> usize {
        self.best.map_or(0, |b| b.0)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<usize> {
    let pairs = crate::choose2(n);
    if n == 0 || pairs > cap {
        return Err(Error::InvalidParameter(format!(
            "binom({n}, 2) = {pairs} pairs; the exhaustive cap is {cap} pairs"
        )));
    }
    Ok(pairs)
}

/// Number of strict colorings of `K_n` (`2^C(n,2)`).
pub fn bal_space(n: usize) -> Result<u64> {
    Ok(1u64 << check_cap(n, BAL_PAIR_CAP)?)
}

/// Number of list colorings of `K_n` (`3^C(n,2)`).
pub fn lbal_space(n: usize) -> Result<u64> {
    Ok(3u64.pow(check_cap(n, LBAL_PAIR_CAP)? as u32))
}

/// Strict coloring with code `mask`.
pub fn coloring_from_mask(n: usize, mask: u64) -> Result<ListColoring> {
    let mut i = 0;
    ListColoring::from_fn(n, |_, _| {
        let l = if mask >> i & 1 == 1 { Label::R } else { Label::B };
        i += 1;
        l
    })
}

/// List coloring with base-3 code `code`.
pub fn coloring_from_code(n: usize, mut code: u64) -> Result<ListColoring> {
    ListColoring::from_fn(n, |_, _| {
        let l = [Label::R, Label::B, Label::RB][(code % 3) as usize];
        code /= 3;
        l
    })
}

/// Scans the strict colorings with codes in `masks`. Only codes with
/// `|R| <= |B|` are visited; swapping colors maps the rest onto them.
pub fn bal_scan(n: usize, g: &SmallGraph, masks: Range<u64>) -> Result<OraclePartial> {
    let pairs = check_cap(n, BAL_PAIR_CAP)?;
    let mut out = OraclePartial::default();
    for mask in masks.start..masks.end.min(1u64 << pairs) {
        let red = mask.count_ones() as usize;
        if 2 * red > pairs {
            continue;
        }
        out.examined += 1;
        // `red` is the smaller class; it cannot beat the best so far.
        if red < out.floor() {
            continue;
        }
        if find_balanced_copy(&coloring_from_mask(n, mask)?, g).is_none() {
            out.offer(red, mask);
        }
    }
    Ok(out)
}

/// Scans the list colorings with codes in `codes`.
///
/// Replacing an `rb` digit by `r` or `b` lowers the code, so every
/// refinement of a coloring is visited before it. A coloring with a
/// balanced copy passes the copy to everything that enlarges its lists;
/// those are marked without searching. Colorings whose smaller class is
/// below the best so far are not searched either (they stay unmarked,
/// which only costs pruning later on).
pub fn lbal_scan(n: usize, g: &SmallGraph, codes: Range<u64>) -> Result<OraclePartial> {
    let pairs = check_cap(n, LBAL_PAIR_CAP)?;
    let end = codes.end.min(3u64.pow(pairs as u32));
    let start = codes.start.min(end);
    let mut has_copy = vec![0u64; ((end - start) as usize).div_ceil(64)];
    let marked = |bits: &[u64], code: u64| {
        code >= start && bits[((code - start) / 64) as usize] >> ((code - start) % 64) & 1 == 1
    };
    let mut out = OraclePartial::default();
    let mut digits = vec![0u8; pairs];
    for code in start..end {
        out.examined += 1;
        let mut rest = code;
        let mut counts = [0usize; 3];
        for d in digits.iter_mut() {
            *d = (rest % 3) as u8;
            counts[*d as usize] += 1;
            rest /= 3;
        }
        let min_class = (counts[0] + counts[2]).min(counts[1] + counts[2]);
        let mut inherited = false;
        let mut place = 1u64;
        for &d in &digits {
            if d == 2 && (marked(&has_copy, code - place) || marked(&has_copy, code - 2 * place)) {
                inherited = true;
                break;
            }
            place *= 3;
        }
        let copy = if inherited {
            true
        } else if min_class < out.floor() {
            continue;
        } else {
            find_balanced_copy(&coloring_from_code(n, code)?, g).is_some()
        };
        if copy {
            let i = (code - start) as usize;
            has_copy[i / 64] |= 1u64 << (i % 64);
        } else {
            out.offer(min_class, code);
        }
    }
    Ok(out)
}

fn finish(n: usize, p: OraclePartial, decode: fn(usize, u64) -> Result<ListColoring>) -> Result<OracleResult> {
    let (value, witness_coloring) = match p.best {
        Some((v, code)) => (v, Some(decode(n, code)?)),
        None => (0, None),
    };
    Ok(OracleResult {
        value,
        witness_coloring,
        colorings_examined: p.examined,
    })
}

/// Turns a merged [`bal_scan`] into the final result.
pub fn bal_finish(n: usize, p: OraclePartial) -> Result<OracleResult> {
    finish(n, p, coloring_from_mask)
}

/// Turns a merged [`lbal_scan`] into the final result.
pub fn lbal_finish(n: usize, p: OraclePartial) -> Result<OracleResult> {
    finish(n, p, coloring_from_code)
}

/// `bal(n, g)` by enumerating every strict coloring of `K_n`.
pub fn bal_exact(n: usize, g: &SmallGraph) -> Result<OracleResult> {
    bal_finish(n, bal_scan(n, g, 0..bal_space(n)?)?)
}

/// `lbal(n, g)` by enumerating every list coloring of `K_n`.
pub fn lbal_exact(n: usize, g: &SmallGraph) -> Result<OracleResult> {
    lbal_finish(n, lbal_scan(n, g, 0..lbal_space(n)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn named(s: &str) -> SmallGraph {
        s.parse::<NamedGraph>().unwrap().build().unwrap()
    }

    #[test]
    fn single_edge_is_always_balanced() {
        let e = SmallGraph::complete(2).unwrap();
        let r = bal_exact(5, &e).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness_coloring.is_none());
        assert_eq!(lbal_exact(4, &e).unwrap().value, 0);
    }

    #[test]
    fn caps() {
        assert!(bal_exact(8, &named("c3")).is_err());
        assert!(lbal_exact(7, &named("c3")).is_err());
        assert_eq!(lbal_space(4).unwrap(), 729);
    }

    #[test]
    fn witness_has_no_copy() {
        for (n, g) in [(5, "c4"), (4, "c3"), (5, "c3")] {
            let g = named(g);
            for r in [bal_exact(n, &g).unwrap(), lbal_exact(n, &g).unwrap()] {
                let w = r.witness_coloring.unwrap();
                assert!(find_balanced_copy(&w, &g).is_none());
                assert_eq!(w.stats().min_class(), r.value);
            }
        }
    }

    #[test]
    fn split_scans_merge_to_the_whole() {
        let g = named("c4");
        let whole = lbal_scan(5, &g, 0..lbal_space(5).unwrap()).unwrap();
        let step = 7919;
        let parts = (0..lbal_space(5).unwrap())
            .step_by(step)
            .map(|s| lbal_scan(5, &g, s..s + step as u64).unwrap())
            .fold(OraclePartial::default(), OraclePartial::merge);
        assert_eq!(whole, parts);
        let whole = bal_scan(5, &g, 0..1024).unwrap();
        let parts = bal_scan(5, &g, 0..300)
            .unwrap()
            .merge(bal_scan(5, &g, 300..1024).unwrap());
        assert_eq!(whole, parts);
    }

    #[test]
    fn codes_decode_in_pair_order() {
        let c = coloring_from_code(3, 2 + 3).unwrap();
        assert_eq!(
            (c.label(0, 1), c.label(0, 2), c.label(1, 2)),
            (Label::RB, Label::B, Label::R)
        );
        let c = coloring_from_mask(3, 0b100).unwrap();
        assert_eq!((c.label(0, 1), c.label(1, 2)), (Label::B, Label::R));
    }
}
