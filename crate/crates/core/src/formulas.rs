//! Closed-form bounds evaluated exactly. Everything but the `K_5` constants
//! is an exact rational; the `K_5` bounds are `f64`.

use alloc::format;
use num_rational::Ratio;

use crate::choose2;
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

fn int(x: usize) -> i64 {
    x as i64
}

/// `½·C(n,2)` as an exact rational.
pub fn half_pairs(n: usize) -> Rational {
    Rational::new(int(choose2(n)), 2)
}

/// Inputs of the odd-cycle formula; `alpha` is `+1` or `-1`, the cycle is
/// `C_{4k+alpha}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleFormulaInput {
    pub n: usize,
    pub k: usize,
    pub alpha: i64,
}

impl CycleFormulaInput {
    pub fn new(n: usize, k: usize, alpha: i64) -> Result<Self> {
        if alpha != 1 && alpha != -1 {
            return Err(Error::InvalidParameter(format!("alpha must be +1 or -1, got {alpha}")));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        Ok(CycleFormulaInput { n, k, alpha })
    }

    /// Cycle length `4k + alpha`.
    pub fn cycle_length(&self) -> usize {
        (4 * int(self.k) + self.alpha) as usize
    }

    /// Whether `n >= 9/2 k² + 13/4 k + 49/32`, the range where the formula is
    /// proved. Reported, never enforced.
    pub fn in_proved_range(&self) -> bool {
        let k = int(self.k);
        32 * int(self.n) >= 144 * k * k + 104 * k + 49
    }
}

/// `(k-1)n - ½(k² - k - 1 - alpha)`: predicted `bal(n, C_{4k+alpha})`.
pub fn bal_odd_cycle(input: CycleFormulaInput) -> Rational {
    let (n, k, a) = (int(input.n), int(input.k), input.alpha);
    Rational::from_integer((k - 1) * n) - Rational::new(k * k - k - 1 - a, 2)
}

/// `((k-1)n - (k-1)², (k-1)n + 12k² + 3k)`; the upper bound is strict.
pub fn c4k_bounds(n: usize, k: usize) -> Result<(i64, i64)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if n < 4 * k {
        return Err(Error::Precondition(format!("n >= 4k fails: n = {n}, 4k = {}", 4 * k)));
    }
    let (n, k) = (int(n), int(k));
    Ok(((k - 1) * n - (k - 1) * (k - 1), (k - 1) * n + 12 * k * k + 3 * k))
}

/// Turán number of a linear forest with component orders `orders` (each at
/// least 2): `(S-1)(n-S+1) + C(S-1,2) + c`, `S = Σ⌊v_i/2⌋`, `c = 1` iff every
/// order is odd. Valid for `n` large; evaluated regardless.
pub fn linear_forest_ex(n: usize, orders: &[usize]) -> Result<i64> {
    if orders.is_empty() || orders.iter().any(|&v| v < 2) {
        return Err(Error::InvalidParameter("component orders must be at least 2".into()));
    }
    let s: i64 = orders.iter().map(|&v| int(v / 2)).sum();
    let c = i64::from(orders.iter().all(|v| v % 2 == 1));
    let n = int(n);
    Ok((s - 1) * (n - s + 1) + (s - 1) * (s - 2) / 2 + c)
}

/// Constants of the `K_5` bounds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct K5Constants {
    /// `2·((√2-1)/(2√2))^{5/2}`.
    pub c: f64,
    /// `1/(4√2)`.
    pub upper_coeff: f64,
}

impl K5Constants {
    pub fn new() -> Self {
        let r2 = libm::sqrt(2.0);
        K5Constants {
            c: 2.0 * libm::pow((r2 - 1.0) / (2.0 * r2), 2.5),
            upper_coeff: 1.0 / (4.0 * r2),
        }
    }
}

impl Default for K5Constants {
    fn default() -> Self {
        Self::new()
    }
}

/// `(½C(n,2) + (1-ε)c·n^{3/2}, ½C(n,2) + (1+ε)·n^{3/2}/(4√2))`.
pub fn k5_bounds(n: usize, eps: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::InvalidParameter(format!(
            "epsilon must lie in [0, 1), got {eps}"
        )));
    }
    let k = K5Constants::new();
    let half = choose2(n) as f64 / 2.0;
    let n32 = libm::pow(n as f64, 1.5);
    Ok((half + (1.0 - eps) * k.c * n32, half + (1.0 + eps) * k.upper_coeff * n32))
}

/// `½C(n,2) + ⌈ex/2⌉`.
pub fn structural_upper_bound(n: usize, exval: usize) -> Rational {
    half_pairs(n) + Rational::from_integer(int(exval.div_ceil(2)))
}

/// `½C(n,2) + ⌈b/2⌉ - 1`: the list-balancing bound when `b` bicolored edges
/// already force a balanced copy.
pub fn bicolored_forcing_bound(n: usize, b: usize) -> Rational {
    half_pairs(n) + Rational::from_integer(int(b.div_ceil(2)) - 1)
}
