//! Brute-force reference computations.
//!
//! Each function here reaches its answer by a different route than the
//! production code it is compared against, and is kept deliberately literal.

use crate::simple::SimpleFunction;
use crate::young::{log_grid, YoungFunction};

/// `inf { r ≥ 0 : Φ(r) > s }` by repeated uniform scans: find an upper bound
/// by doubling, then scan the current cell in 1000 steps and keep the cell
/// where `Φ` first exceeds `s`. Returns the left end of the final cell.
pub fn scan_inverse(phi: &YoungFunction, s: f64) -> f64 {
    let mut hi = 1.0;
    while phi.value(hi) <= s {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..8 {
        let step = (hi - lo) / 1000.0;
        if step <= 0.0 {
            break;
        }
        let mut k = 0;
        while k < 1000 && phi.value(lo + step * (k + 1) as f64) <= s {
            k += 1;
        }
        let new_lo = lo + step * k as f64;
        hi = (lo + step * (k + 1) as f64).min(hi);
        lo = new_lo;
    }
    lo
}

/// Rigorous bracket on `sup_{t>0} Φ(t)·|{ f > t·b }|` from a log grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSup {
    /// Largest sampled value: a lower bound on the supremum.
    pub lower: f64,
    /// Upper Riemann envelope, `max_k Φ(t_{k+1})·d(t_k·b)` plus the tail below
    /// the grid: an upper bound on the supremum.
    pub upper: f64,
}

/// Evaluates `Φ(t)·distribution(f, t·b)` on `points` log-spaced `t` from
/// `1e-3·min(f)/b` up to `max(f)/b`, where the distribution becomes zero.
pub fn weak_sup_grid(phi: &YoungFunction, f: &SimpleFunction, b: f64, points: usize) -> GridSup {
    let positive = f.values().iter().copied().filter(|&v| v > 0.0);
    let (min, max) = positive.fold((f64::INFINITY, 0.0_f64), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if max == 0.0 {
        return GridSup { lower: 0.0, upper: 0.0 };
    }
    let grid = log_grid(1e-3 * min / b, max / b, points);
    let dist: Vec<f64> = grid.iter().map(|&t| f.distribution(t * b)).collect();
    let vals: Vec<f64> = grid.iter().map(|&t| phi.value(t)).collect();

    let lower = (0..grid.len()).map(|k| vals[k] * dist[k]).fold(0.0, f64::max);
    // on (0, t_0) the product is at most Φ(t_0)·d(0)
    let tail = vals[0] * f.distribution(0.0);
    let upper = (0..grid.len() - 1).map(|k| vals[k + 1] * dist[k]).fold(tail, f64::max);
    GridSup { lower, upper }
}

/// Weak quasi-norm in closed form: `b` is feasible iff `Φ(v/b) ≤ 1/|{f ≥ v}|`
/// for every value `v`, i.e. `b ≥ v / Φ⁻¹(1/|{f ≥ v}|)`.
pub fn weak_norm_by_levels(phi: &YoungFunction, f: &SimpleFunction) -> f64 {
    let mut values: Vec<f64> = f.values().iter().copied().filter(|&v| v > 0.0).collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
        .into_iter()
        .map(|v| v / phi.inverse_at(1.0 / f.superlevel_measure(v)).unwrap())
        .fold(0.0, f64::max)
}
