use serde::Serialize;

use crate::error::{Error, Result};
use crate::tol;

/// Final bisection bracket: `pred(lo)` is false (or `lo == 0`), `pred(hi)` is true.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub iterations: usize,
}

/// Finds `inf { b > 0 : pred(b) }` for a predicate that is monotone in `b`
/// (false below some threshold, true above it).
///
/// Starts at `b = 1`, halves or doubles until the predicate flips, then
/// bisects to relative width [`tol::BISECT_REL`]. The returned `hi` always
/// satisfies the predicate.
pub fn infimum_of_feasible<P>(mut pred: P) -> Result<Bracket>
where
    P: FnMut(f64) -> bool,
{
    let (mut lo, mut hi);
    let mut iterations = 0;
    if pred(1.0) {
        hi = 1.0;
        lo = 0.5;
        while pred(lo) {
            hi = lo;
            lo *= 0.5;
            iterations += 1;
            if lo < f64::MIN_POSITIVE {
                return Ok(Bracket {
                    lo: 0.0,
                    hi,
                    iterations,
                });
            }
        }
    } else {
        lo = 1.0;
        hi = 2.0;
        while !pred(hi) {
            lo = hi;
            hi *= 2.0;
            iterations += 1;
            if !hi.is_finite() {
                return Err(Error::Overflow(format!(
                    "no feasible value below 2^1024 (last infeasible {lo:e})"
                )));
            }
        }
    }

    let mut steps = 0;
    while hi - lo > tol::BISECT_REL * hi && steps < tol::BISECT_MAX_ITER {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
        steps += 1;
    }
    Ok(Bracket {
        lo,
        hi,
        iterations: iterations + steps,
    })
}
