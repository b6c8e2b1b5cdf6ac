//! Young functions and their generalized inverses.
//!
//! Four families are supported:
//!
//! | family             | `Φ(t)`                              | `Φ⁻¹(s)`                        |
//! |--------------------|-------------------------------------|---------------------------------|
//! | `power`            | `t^p`, `p ≥ 1`                      | `s^(1/p)`                       |
//! | `hinge`            | `a·max(0, t − t₀)`                  | `t₀ + s/a`                      |
//! | `exp_power`        | `e^(t^p) − 1`, `p ≥ 1`              | `ln(1 + s)^(1/p)`               |
//! | `piecewise_linear` | linear interpolation of knots, extended with the last slope | segment lookup |
//!
//! The generalized inverse is `Φ⁻¹(s) = inf { r ≥ 0 : Φ(r) > s }`. On a flat
//! segment it returns the right edge, so a hinge has `Φ⁻¹(0) = t₀`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tol;

/// Validated knot list of a convex piecewise-linear Young function.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    knots: Vec<(f64, f64)>,
    // slopes[k] is the slope of the segment ending at knots[k + 1]
    slopes: Vec<f64>,
}

impl PiecewiseLinear {
    pub fn new(knots: Vec<(f64, f64)>) -> Result<Self> {
        let invalid = |msg: &str| Err(Error::InvalidFunction(msg.to_string()));
        if knots.len() < 2 {
            return invalid("piecewise_linear needs at least two knots");
        }
        if knots.iter().any(|&(t, y)| !t.is_finite() || !y.is_finite()) {
            return invalid("piecewise_linear knots must be finite");
        }
        if knots[0] != (0.0, 0.0) {
            return invalid("piecewise_linear must start at knot (0, 0)");
        }
        if knots.windows(2).any(|w| w[1].0 <= w[0].0) {
            return invalid("piecewise_linear abscissas must be strictly increasing");
        }
        let slopes: Vec<f64> = knots
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect();
        if slopes[0] < 0.0 {
            return invalid("piecewise_linear values must be nondecreasing");
        }
        for w in slopes.windows(2) {
            let slack = 1e-12 * w[0].abs().max(w[1].abs());
            if w[1] < w[0] - slack {
                return invalid("piecewise_linear chord slopes must be nondecreasing (convexity)");
            }
        }
        if *slopes.last().unwrap() <= 0.0 {
            return invalid("piecewise_linear last slope must be > 0 (unbounded growth)");
        }
        Ok(Self { knots, slopes })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    fn last_slope(&self) -> f64 {
        *self.slopes.last().unwrap()
    }

    fn value(&self, t: f64) -> f64 {
        // index of the first knot strictly to the right of t
        let k = self.knots.partition_point(|&(x, _)| x <= t);
        if k >= self.knots.len() {
            let (tk, yk) = *self.knots.last().unwrap();
            return yk + self.last_slope() * (t - tk);
        }
        let (t0, y0) = self.knots[k - 1];
        y0 + self.slopes[k - 1] * (t - t0)
    }

    fn inverse(&self, s: f64) -> f64 {
        let k = self.knots.partition_point(|&(_, y)| y <= s);
        if k >= self.knots.len() {
            let (tk, yk) = *self.knots.last().unwrap();
            return tk + (s - yk) / self.last_slope();
        }
        // y[k-1] <= s < y[k], so this segment has positive slope
        let (t0, y0) = self.knots[k - 1];
        t0 + (s - y0) / self.slopes[k - 1]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Power { p: f64 },
    Hinge { slope: f64, threshold: f64 },
    ExpPower { p: f64 },
    PiecewiseLinear(PiecewiseLinear),
}

/// A validated Young function.
#[derive(Debug, Clone, PartialEq)]
pub struct YoungFunction {
    family: Family,
}

/// Argument of the generalized inverse: a finite `s ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct InverseQuery(f64);

impl InverseQuery {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::Domain(format!(
                "inverse argument must be finite and ≥ 0, got {s}"
            )));
        }
        Ok(Self(s))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

fn check_exponent(p: f64, what: &str) -> Result<()> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidFunction(format!("{what} exponent must be ≥ 1")));
    }
    Ok(())
}

impl YoungFunction {
    /// `Φ(t) = t^p`.
    pub fn power(p: f64) -> Result<Self> {
        check_exponent(p, "power")?;
        Ok(Self {
            family: Family::Power { p },
        })
    }

    /// `Φ(t) = slope·max(0, t − threshold)`.
    pub fn hinge(slope: f64, threshold: f64) -> Result<Self> {
        if !slope.is_finite() || slope <= 0.0 {
            return Err(Error::InvalidFunction("hinge slope must be > 0".into()));
        }
        if !threshold.is_finite() || threshold < 0.0 {
            return Err(Error::InvalidFunction("hinge threshold must be ≥ 0".into()));
        }
        Ok(Self {
            family: Family::Hinge { slope, threshold },
        })
    }

    /// `Φ(t) = e^(t^p) − 1`.
    pub fn exp_power(p: f64) -> Result<Self> {
        check_exponent(p, "exp_power")?;
        Ok(Self {
            family: Family::ExpPower { p },
        })
    }

    pub fn piecewise_linear(knots: Vec<(f64, f64)>) -> Result<Self> {
        Ok(Self {
            family: Family::PiecewiseLinear(PiecewiseLinear::new(knots)?),
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn kind(&self) -> &'static str {
        match self.family {
            Family::Power { .. } => "power",
            Family::Hinge { .. } => "hinge",
            Family::ExpPower { .. } => "exp_power",
            Family::PiecewiseLinear(_) => "piecewise_linear",
        }
    }

    /// True when `Φ(t) > 0` for every `t > 0`, equivalently `Φ⁻¹(0) = 0`.
    pub fn is_positive_off_zero(&self) -> bool {
        match &self.family {
            Family::Power { .. } | Family::ExpPower { .. } => true,
            Family::Hinge { threshold, .. } => *threshold == 0.0,
            Family::PiecewiseLinear(pl) => pl.slopes[0] > 0.0,
        }
    }

    /// `Φ(t)`. Fails for negative or non-finite `t`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!("Φ is defined on [0, ∞), got {t}")));
        }
        Ok(self.value(t))
    }

    /// Unchecked evaluation; `t` must be finite and nonnegative.
    pub(crate) fn value(&self, t: f64) -> f64 {
        if t == 0.0 {
            return 0.0;
        }
        match &self.family {
            Family::Power { p } => t.powf(*p),
            Family::Hinge { slope, threshold } => slope * (t - threshold).max(0.0),
            Family::ExpPower { p } => t.powf(*p).exp_m1(),
            Family::PiecewiseLinear(pl) => pl.value(t),
        }
    }

    /// `inf { r ≥ 0 : Φ(r) > s }` in closed form.
    pub fn generalized_inverse(&self, q: InverseQuery) -> f64 {
        let s = q.get();
        match &self.family {
            Family::Power { p } => {
                if s == 0.0 {
                    0.0
                } else {
                    s.powf(p.recip())
                }
            }
            Family::Hinge { slope, threshold } => threshold + s / slope,
            Family::ExpPower { p } => {
                if s == 0.0 {
                    0.0
                } else {
                    s.ln_1p().powf(p.recip())
                }
            }
            Family::PiecewiseLinear(pl) => pl.inverse(s),
        }
    }

    /// [`generalized_inverse`](Self::generalized_inverse) for a raw `s`.
    pub fn inverse_at(&self, s: f64) -> Result<f64> {
        Ok(self.generalized_inverse(InverseQuery::new(s)?))
    }

    /// The generalized inverse by bracketing and bisection, using nothing but
    /// evaluations of `Φ`. Works for any family; returns the left end of the
    /// final bracket, so `Φ(result) ≤ s` always holds.
    pub fn generalized_inverse_bisect(&self, q: InverseQuery) -> Result<f64> {
        let s = q.get();
        let mut hi = 1.0_f64;
        while self.value(hi) <= s {
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(Error::Overflow(format!("Φ never exceeds {s} below 2^1024")));
            }
        }
        let mut lo = 0.0_f64;
        let mut steps = 0;
        while hi - lo > tol::BISECT_REL * hi && steps < tol::BISECT_MAX_ITER {
            let mid = lo + 0.5 * (hi - lo);
            if self.value(mid) > s {
                hi = mid;
            } else {
                lo = mid;
            }
            steps += 1;
        }
        Ok(lo)
    }

    /// Checks the Young-function invariants on `0` plus a log-spaced grid of
    /// `grid_size` points in `[1e-6, 1e6]`.
    pub fn validate(&self, grid_size: usize) -> Result<Diagnostics> {
        if grid_size < 3 {
            return Err(Error::InvalidGrid("validate needs grid_size ≥ 3".into()));
        }
        let mut grid = vec![0.0];
        grid.extend(log_grid(1e-6, 1e6, grid_size));
        let values: Vec<f64> = grid.iter().map(|&t| self.value(t)).collect();

        let zero = InvariantCheck::from_offender("phi_zero", (values[0] != 0.0).then(|| vec![0.0]));

        let nondecreasing = InvariantCheck::from_offender(
            "nondecreasing",
            (0..grid.len() - 1)
                .find(|&i| !(values[i] <= values[i + 1]))
                .map(|i| vec![grid[i], grid[i + 1]]),
        );

        let mut convex_offender = None;
        'outer: for i in 0..grid.len() {
            for j in i + 1..grid.len() {
                let mid = self.value(0.5 * (grid[i] + grid[j]));
                let slack = tol::CONVEX * (1.0 + values[i].abs() + values[j].abs());
                if !(mid <= 0.5 * (values[i] + values[j]) + slack) {
                    convex_offender = Some(vec![grid[i], grid[j]]);
                    break 'outer;
                }
            }
        }
        let convex = InvariantCheck::from_offender("midpoint_convex", convex_offender);

        let growth_ok = match &self.family {
            Family::Power { p } | Family::ExpPower { p } => *p >= 1.0,
            Family::Hinge { slope, .. } => *slope > 0.0,
            Family::PiecewiseLinear(pl) => pl.last_slope() > 0.0,
        };
        let growth = InvariantCheck {
            name: "unbounded_growth",
            passed: growth_ok,
            first_offender: None,
        };

        Ok(Diagnostics {
            checks: vec![zero, nondecreasing, convex, growth],
        })
    }
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub(crate) fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            if i == 0 {
                lo
            } else if i == n - 1 {
                hi
            } else {
                (a + (b - a) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub passed: bool,
    pub first_offender: Option<Vec<f64>>,
}

impl InvariantCheck {
    fn from_offender(name: &'static str, offender: Option<Vec<f64>>) -> Self {
        Self {
            name,
            passed: offender.is_none(),
            first_offender: offender,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub checks: Vec<InvariantCheck>,
}

impl Diagnostics {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
