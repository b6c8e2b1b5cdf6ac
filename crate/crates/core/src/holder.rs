//! Generalized Hölder compatibility of a system `(Φ; Φ₁, …, Φ_m)`.
//!
//! The system is compatible when `∏ Φᵢ⁻¹(t) ≤ C Φ⁻¹(t)` for all `t ≥ 0`. This is
//! equivalent to
//!
//! * `Φ(∏ tᵢ / C) ≤ Σ Φᵢ(tᵢ)` for all `tᵢ ≥ 0` (condition 2),
//! * `‖∏ fᵢ‖_Φ ≤ M ∏ ‖fᵢ‖_Φᵢ` in Orlicz spaces, with `M = mC`,
//! * the same inequality for the weak quasi-norms, again with `M = mC`.
//!
//! Everything here is checked on finite grids; verdicts are "on grid" and come
//! with witnesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::norms::{luxemburg_norm, weak_norm};
use crate::simple::{product, Ball, SimpleFunction};
use crate::tol;
use crate::young::{log_grid, YoungFunction};

#[derive(Debug, Clone, PartialEq)]
pub struct HolderSystem {
    target: YoungFunction,
    factors: Vec<YoungFunction>,
}

impl HolderSystem {
    pub fn new(target: YoungFunction, factors: Vec<YoungFunction>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidFunction("a system needs at least one factor".into()));
        }
        Ok(Self { target, factors })
    }

    /// `Φ = t^p`, `Φᵢ = t^pᵢ`.
    pub fn powers(p: f64, ps: &[f64]) -> Result<Self> {
        let factors = ps.iter().map(|&q| YoungFunction::power(q)).collect::<Result<_>>()?;
        Self::new(YoungFunction::power(p)?, factors)
    }

    pub fn target(&self) -> &YoungFunction {
        &self.target
    }

    pub fn factors(&self) -> &[YoungFunction] {
        &self.factors
    }

    pub fn m(&self) -> usize {
        self.factors.len()
    }

    fn numerator(&self, t: f64) -> f64 {
        self.factors.iter().map(|phi| phi.inverse_at(t).unwrap()).product()
    }

    fn ratio_at(&self, t: f64) -> Ratio {
        let n = self.numerator(t);
        let d = self.target.inverse_at(t).unwrap();
        match (n == 0.0, d == 0.0) {
            (true, true) => Ratio::Vacuous,
            (false, true) => Ratio::Infinite,
            _ => Ratio::Finite(n / d),
        }
    }
}

/// Log-spaced sampling of `[t_min, t_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxisGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl AxisGrid {
    /// 400 points over `[1e-8, 1e8]`, the sweep grid for condition 1.
    pub const SWEEP: AxisGrid = AxisGrid {
        t_min: 1e-8,
        t_max: 1e8,
        points: 400,
    };
    /// 40 points per axis over `[1e-8, 1e8]`, for condition 2.
    pub const TENSOR_AXIS: AxisGrid = AxisGrid {
        t_min: 1e-8,
        t_max: 1e8,
        points: 40,
    };

    pub fn new(t_min: f64, t_max: f64, points: usize) -> Result<Self> {
        let grid = Self { t_min, t_max, points };
        grid.check()?;
        Ok(grid)
    }

    fn check(&self) -> Result<()> {
        if !(self.t_min.is_finite() && self.t_max.is_finite() && 0.0 < self.t_min && self.t_min < self.t_max) {
            return Err(Error::InvalidGrid(format!(
                "need 0 < t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidGrid("need at least 2 points".into()));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        log_grid(self.t_min, self.t_max, self.points)
    }
}

/// `∏ Φᵢ⁻¹(t) / Φ⁻¹(t)` at one grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ratio {
    Finite(f64),
    /// `0/0`: the inequality holds for every `C`.
    Vacuous,
    /// Positive numerator over a zero denominator.
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantEstimate {
    Finite(f64),
    Unbounded,
}

impl ConstantEstimate {
    pub fn value(self) -> Option<f64> {
        match self {
            ConstantEstimate::Finite(c) => Some(c),
            ConstantEstimate::Unbounded => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Compatible,
    IncompatibleOnGrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GridEnd {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    MaxRatio,
    ZeroDenominator,
    Divergence { end: GridEnd, log_slope: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub t: f64,
    pub ratio: Ratio,
    pub kind: WitnessKind,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HolderReport {
    /// Grid supremum of the ratio, or unbounded when the sweep found a zero
    /// denominator or a ratio still diverging at a grid end.
    pub c_hat: ConstantEstimate,
    /// Largest finite ratio on the grid, whatever the verdict.
    pub grid_max: Option<f64>,
    pub verdict: Verdict,
    pub grid: Vec<f64>,
    pub ratios: Vec<Ratio>,
    /// The ratio at `t = 0`, which the log grid does not reach.
    pub at_zero: Ratio,
    pub witnesses: Vec<Witness>,
}

impl HolderReport {
    pub fn is_compatible(&self) -> bool {
        self.verdict == Verdict::Compatible
    }
}

// log-log slope of the ratio between two grid indices
fn log_slope(grid: &[f64], ratios: &[Ratio], i: usize, j: usize) -> Option<f64> {
    match (ratios[i], ratios[j]) {
        (Ratio::Finite(a), Ratio::Finite(b)) if a > 0.0 && b > 0.0 => {
            Some((b.ln() - a.ln()) / (grid[j].ln() - grid[i].ln()))
        }
        _ => None,
    }
}

/// Sweeps `∏ Φᵢ⁻¹(t) / Φ⁻¹(t)` over `t = 0` and a log grid and estimates the
/// best constant.
///
/// A positive numerator over a zero denominator makes the system unbounded.
/// So does a ratio whose log-log slope over the last `points/20` grid steps
/// exceeds [`tol::TREND`] in the diverging direction (rising towards `t_max`
/// or towards `t_min`).
pub fn best_constant(sys: &HolderSystem, t_min: f64, t_max: f64, points: usize) -> Result<HolderReport> {
    let axis = AxisGrid::new(t_min, t_max, points)?;
    let grid = axis.values();
    let ratios: Vec<Ratio> = grid.iter().map(|&t| sys.ratio_at(t)).collect();
    let at_zero = sys.ratio_at(0.0);

    let mut witnesses = Vec::new();
    if at_zero == Ratio::Infinite {
        witnesses.push(Witness {
            t: 0.0,
            ratio: at_zero,
            kind: WitnessKind::ZeroDenominator,
        });
    }
    for (&t, &ratio) in grid.iter().zip(&ratios) {
        if ratio == Ratio::Infinite {
            witnesses.push(Witness {
                t,
                ratio,
                kind: WitnessKind::ZeroDenominator,
            });
        }
    }

    // first point attaining the largest finite ratio, t = 0 included
    let mut best: Option<(f64, f64)> = None;
    for (t, ratio) in std::iter::once((0.0, at_zero)).chain(grid.iter().copied().zip(ratios.iter().copied())) {
        if let Ratio::Finite(r) = ratio {
            if best.is_none_or(|(_, m)| r > m) {
                best = Some((t, r));
            }
        }
    }
    let grid_max = best.map(|(_, r)| r);
    if let Some((t, r)) = best {
        witnesses.push(Witness {
            t,
            ratio: Ratio::Finite(r),
            kind: WitnessKind::MaxRatio,
        });
    }

    let n = grid.len();
    let window = ((n - 1) / 20).max(1);
    if let Some(slope) = log_slope(&grid, &ratios, 0, window) {
        if slope < -tol::TREND {
            witnesses.push(Witness {
                t: grid[0],
                ratio: ratios[0],
                kind: WitnessKind::Divergence {
                    end: GridEnd::Lower,
                    log_slope: slope,
                },
            });
        }
    }
    if let Some(slope) = log_slope(&grid, &ratios, n - 1 - window, n - 1) {
        if slope > tol::TREND {
            witnesses.push(Witness {
                t: grid[n - 1],
                ratio: ratios[n - 1],
                kind: WitnessKind::Divergence {
                    end: GridEnd::Upper,
                    log_slope: slope,
                },
            });
        }
    }

    let unbounded = witnesses.iter().any(|w| w.kind != WitnessKind::MaxRatio);
    let (c_hat, verdict) = if unbounded {
        (ConstantEstimate::Unbounded, Verdict::IncompatibleOnGrid)
    } else {
        (ConstantEstimate::Finite(grid_max.unwrap_or(0.0)), Verdict::Compatible)
    };
    Ok(HolderReport {
        c_hat,
        grid_max,
        verdict,
        grid,
        ratios,
        at_zero,
        witnesses,
    })
}

/// One failed instance of `Φ(∏ tᵢ / C) ≤ Σ Φᵢ(tᵢ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationRecord {
    pub tuple: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

fn phi_or_inf(phi: &YoungFunction, x: f64) -> f64 {
    if x.is_finite() {
        phi.value(x)
    } else {
        f64::INFINITY
    }
}

/// Evaluates condition 2 on the tensor grid `({0} ∪ axis)^m`.
pub fn check_condition2(sys: &HolderSystem, c: f64, axis: &AxisGrid) -> Result<Vec<ViolationRecord>> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::Domain(format!("constant C must be finite and > 0, got {c}")));
    }
    axis.check()?;
    let m = sys.m();
    let size = ((axis.points + 1) as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > tol::TENSOR_BUDGET as u128 {
        return Err(Error::GridTooLarge {
            size,
            budget: tol::TENSOR_BUDGET,
        });
    }

    let mut values = vec![0.0];
    values.extend(axis.values());
    // Φᵢ on the axis, evaluated once
    let table: Vec<Vec<f64>> = sys
        .factors
        .iter()
        .map(|phi| values.iter().map(|&t| phi.value(t)).collect())
        .collect();

    let mut violations = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let prod: f64 = idx.iter().map(|&k| values[k]).product();
        let lhs = phi_or_inf(&sys.target, prod / c);
        let rhs: f64 = idx.iter().zip(&table).map(|(&k, row)| row[k]).sum();
        let slack = rhs - lhs;
        if rhs.is_finite() && slack < -tol::REL * (1.0 + rhs.abs()) {
            violations.push(ViolationRecord {
                tuple: idx.iter().map(|&k| values[k]).collect(),
                lhs,
                rhs,
                slack,
            });
        }

        let mut axis_i = 0;
        loop {
            if axis_i == m {
                return Ok(violations);
            }
            idx[axis_i] += 1;
            if idx[axis_i] < values.len() {
                break;
            }
            idx[axis_i] = 0;
            axis_i += 1;
        }
    }
}

/// Outcome of `‖∏ fᵢ‖ ≤ M ∏ ‖fᵢ‖` for one tuple.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HolderTest {
    pub passed: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub m_const: f64,
    /// `lhs / (M·rhs)`; infinite when a nonzero product meets a zero bound.
    pub slack_ratio: f64,
}

fn holder_test<N>(sys: &HolderSystem, fs: &[SimpleFunction], m_const: f64, norm: N) -> Result<HolderTest>
where
    N: Fn(&YoungFunction, &SimpleFunction) -> f64,
{
    if fs.len() != sys.m() {
        return Err(Error::InvalidFunction(format!(
            "system has {} factors but {} functions were given",
            sys.m(),
            fs.len()
        )));
    }
    if !(m_const.is_finite() && m_const > 0.0) {
        return Err(Error::Domain(format!("M must be finite and > 0, got {m_const}")));
    }
    let prod = product(fs)?;
    let lhs = norm(&sys.target, &prod);
    let rhs: f64 = sys.factors.iter().zip(fs).map(|(phi, f)| norm(phi, f)).product();
    let bound = m_const * rhs;
    let slack_ratio = if lhs == 0.0 {
        0.0
    } else if bound == 0.0 {
        f64::INFINITY
    } else {
        lhs / bound
    };
    let passed = lhs <= bound * (1.0 + 4.0 * tol::REL);
    Ok(HolderTest {
        passed,
        lhs,
        rhs,
        m_const,
        slack_ratio,
    })
}

/// `‖∏ fᵢ‖_{L_Φ} ≤ M ∏ ‖fᵢ‖_{L_Φᵢ}` with Luxemburg norms.
pub fn holder_test_strong(sys: &HolderSystem, fs: &[SimpleFunction], m_const: f64) -> Result<HolderTest> {
    holder_test(sys, fs, m_const, |phi, f| luxemburg_norm(phi, f).value)
}

/// `‖∏ fᵢ‖_{wL_Φ} ≤ M ∏ ‖fᵢ‖_{wL_Φᵢ}` with weak quasi-norms.
pub fn holder_test_weak(sys: &HolderSystem, fs: &[SimpleFunction], m_const: f64) -> Result<HolderTest> {
    holder_test(sys, fs, m_const, |phi, f| weak_norm(phi, f).value)
}

/// `‖χ_B‖_Φ / ∏ ‖χ_B‖_Φᵢ`, computed from Luxemburg norms of the ball indicator.
/// Any admissible `M` is at least this ratio, and it equals
/// `∏ Φᵢ⁻¹(1/|B|) / Φ⁻¹(1/|B|)`.
pub fn indicator_sharpness(sys: &HolderSystem, ball: &Ball) -> f64 {
    let chi = ball.indicator();
    let num = luxemburg_norm(&sys.target, &chi).value;
    let den: f64 = sys.factors.iter().map(|phi| luxemburg_norm(phi, &chi).value).product();
    num / den
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LebesgueCheck {
    /// `Σ 1/pᵢ = 1/p` within `1e-12`.
    pub exact: bool,
    pub report: HolderReport,
    /// The sweep agrees: `c_hat ≈ 1` when exact, unbounded otherwise.
    pub consistent: bool,
}

pub fn lebesgue_exponent_check(p: f64, ps: &[f64]) -> Result<LebesgueCheck> {
    if let Some(q) = std::iter::once(&p).chain(ps).find(|q| !(q.is_finite() && **q >= 1.0)) {
        return Err(Error::Domain(format!("exponents must be ≥ 1, got {q}")));
    }
    let sys = HolderSystem::powers(p, ps)?;
    let exact = (ps.iter().map(|q| q.recip()).sum::<f64>() - p.recip()).abs() <= 1e-12;
    let s = AxisGrid::SWEEP;
    let report = best_constant(&sys, s.t_min, s.t_max, s.points)?;
    let consistent = match (exact, report.c_hat) {
        (true, ConstantEstimate::Finite(c)) => (c - 1.0).abs() <= 1e-6,
        (false, ConstantEstimate::Unbounded) => true,
        _ => false,
    };
    Ok(LebesgueCheck {
        exact,
        report,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep(sys: &HolderSystem) -> HolderReport {
        best_constant(sys, 1e-8, 1e8, 400).unwrap()
    }

    fn power(p: f64) -> YoungFunction {
        YoungFunction::power(p).unwrap()
    }

    #[test]
    fn best_constant_examples() {
        let r = sweep(&HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap());
        assert_eq!(r.verdict, Verdict::Compatible);
        assert!((r.c_hat.value().unwrap() - 1.0).abs() < 1e-12);

        let r = sweep(&HolderSystem::powers(2.0, &[2.0]).unwrap());
        assert_eq!(r.c_hat, ConstantEstimate::Finite(1.0));

        // ratio t^(1/2) reaches 1e4 at t = 1e8
        let r = sweep(&HolderSystem::powers(2.0, &[2.0, 2.0]).unwrap());
        assert_eq!(r.verdict, Verdict::IncompatibleOnGrid);
        assert_eq!(r.c_hat, ConstantEstimate::Unbounded);
        assert!((r.grid_max.unwrap() - 1e4).abs() < 1e-6);
        assert!(r.witnesses.iter().any(|w| matches!(
            w.kind,
            WitnessKind::Divergence { end: GridEnd::Upper, log_slope } if (log_slope - 0.5).abs() < 1e-9
        )));
    }

    #[test]
    fn zero_denominator_is_unbounded() {
        // Φ⁻¹(0) = 0 for the target but the hinge factor has Φ₁⁻¹(0) = 1
        let sys = HolderSystem::new(power(1.0), vec![YoungFunction::hinge(1.0, 1.0).unwrap()]).unwrap();
        let r = sweep(&sys);
        assert_eq!(r.at_zero, Ratio::Infinite);
        assert_eq!(r.c_hat, ConstantEstimate::Unbounded);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.kind == WitnessKind::ZeroDenominator && w.t == 0.0));
    }

    #[test]
    fn hinge_target_is_compatible() {
        let sys = HolderSystem::new(YoungFunction::hinge(1.0, 1.0).unwrap(), vec![power(2.0), power(2.0)]).unwrap();
        let r = sweep(&sys);
        assert_eq!(r.verdict, Verdict::Compatible);
        // t/(1+t) at t = 1e8
        assert!((r.c_hat.value().unwrap() - 1e8 / (1.0 + 1e8)).abs() < 1e-15);
        assert_eq!(r.at_zero, Ratio::Finite(0.0));
    }

    #[test]
    fn vacuous_points_are_skipped() {
        let sys = HolderSystem::new(power(1.0), vec![power(1.0)]).unwrap();
        assert_eq!(sweep(&sys).at_zero, Ratio::Vacuous);
    }

    #[test]
    fn grid_errors() {
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        assert!(best_constant(&sys, 1.0, 1.0, 10).is_err());
        assert!(best_constant(&sys, 0.0, 1.0, 10).is_err());
        assert!(best_constant(&sys, 1.0, 2.0, 1).is_err());
        assert!(HolderSystem::new(power(1.0), vec![]).is_err());
    }

    #[test]
    fn condition2_examples() {
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        let one_point = AxisGrid::new(3.0, 3.0 + 1e-9, 2).unwrap();
        assert!(check_condition2(&sys, 1.0, &one_point).unwrap().is_empty());
        assert!(check_condition2(&sys, 1.0, &AxisGrid::TENSOR_AXIS).unwrap().is_empty());

        let bad = HolderSystem::powers(2.0, &[2.0, 2.0]).unwrap();
        let two = AxisGrid::new(2.0, 2.0 + 1e-12, 2).unwrap();
        let v = check_condition2(&bad, 1.0, &two).unwrap();
        // LHS (2·2)² = 16 > RHS 4 + 4
        let at_two = v.iter().find(|r| r.tuple == vec![2.0, 2.0]).unwrap();
        assert_eq!((at_two.lhs, at_two.rhs, at_two.slack), (16.0, 8.0, -8.0));
        assert!(v.iter().all(|r| r.tuple.iter().all(|&t| t > 0.0)));
    }

    #[test]
    fn condition2_budget() {
        let sys = HolderSystem::powers(1.0, &[4.0, 4.0, 4.0, 4.0]).unwrap();
        let err = check_condition2(&sys, 1.0, &AxisGrid::TENSOR_AXIS).unwrap_err();
        assert!(matches!(err, Error::GridTooLarge { .. }));
        assert!(check_condition2(&sys, 0.0, &AxisGrid::TENSOR_AXIS).is_err());
    }

    #[test]
    fn holder_test_examples() {
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        let chi = SimpleFunction::new(vec![1.0], vec![1.0]).unwrap();
        let t = holder_test_strong(&sys, &[chi.clone(), chi.clone()], 1.0).unwrap();
        assert!(t.passed);
        assert!((t.slack_ratio - 1.0).abs() < 1e-11);
        assert!(holder_test_weak(&sys, &[chi.clone(), chi.clone()], 1.0).unwrap().passed);

        let zero = SimpleFunction::zero(chi.partition().clone());
        let t = holder_test_strong(&sys, &[chi.clone(), zero.clone()], 1e-6).unwrap();
        assert!(t.passed && t.lhs == 0.0);
        assert!(holder_test_weak(&sys, &[zero, chi.clone()], 1e-6).unwrap().passed);

        assert!(holder_test_strong(&sys, std::slice::from_ref(&chi), 1.0).is_err());
        let other = SimpleFunction::new(vec![2.0], vec![1.0]).unwrap();
        assert_eq!(
            holder_test_strong(&sys, &[chi, other], 1.0),
            Err(Error::PartitionMismatch)
        );
    }

    #[test]
    fn cauchy_schwarz_two_cells() {
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        let f = SimpleFunction::new(vec![0.3, 2.0], vec![5.0, 0.1]).unwrap();
        let g = SimpleFunction::on(f.partition().clone(), vec![0.7, 9.0]).unwrap();
        // ‖fg‖₁ = 0.3·3.5 + 2·0.9 = 2.85; ‖f‖₂‖g‖₂ = √(7.52·162.147)
        let t = holder_test_strong(&sys, &[f, g], 1.0).unwrap();
        assert!(t.passed);
        assert!((t.lhs - 2.85).abs() < 1e-10);
        assert!((t.rhs - (7.52f64 * 162.147).sqrt()).abs() < 1e-9);
    }

    #[test]
    fn weak_lebesgue_constant_one_is_not_enough() {
        // wL¹ norm of fg = 6·2 = 12; wL² norms of f and g are max(2√2, 3) = 3
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        let f = SimpleFunction::new(vec![1.0, 1.0], vec![2.0, 3.0]).unwrap();
        let g = SimpleFunction::on(f.partition().clone(), vec![3.0, 2.0]).unwrap();
        let t = holder_test_weak(&sys, &[f.clone(), g.clone()], 1.0).unwrap();
        assert!(!t.passed);
        assert!((t.slack_ratio - 4.0 / 3.0).abs() < 1e-10);
        assert!(holder_test_weak(&sys, &[f, g], 2.0).unwrap().passed);
    }

    #[test]
    fn sharpness_examples() {
        let sys = HolderSystem::powers(1.0, &[2.0, 2.0]).unwrap();
        for r in [0.01, 1.0, 30.0] {
            let ball = Ball::new(2, r).unwrap();
            assert!((indicator_sharpness(&sys, &ball) - 1.0).abs() < 1e-10);
        }
        let id = HolderSystem::new(
            YoungFunction::exp_power(2.0).unwrap(),
            vec![YoungFunction::exp_power(2.0).unwrap()],
        )
        .unwrap();
        assert!((indicator_sharpness(&id, &Ball::new(3, 0.4).unwrap()) - 1.0).abs() < 1e-10);

        let mixed = HolderSystem::new(YoungFunction::hinge(1.0, 1.0).unwrap(), vec![power(2.0), power(3.0)]).unwrap();
        let ball = Ball::new(1, 0.5).unwrap();
        // |B| = 1: Φ₁⁻¹(1)·Φ₂⁻¹(1) / Φ⁻¹(1) = 1·1/2
        assert!((indicator_sharpness(&mixed, &ball) - 0.5).abs() < 1e-10);
    }

    #[test]
    fn lebesgue_examples() {
        let c = lebesgue_exponent_check(1.0, &[2.0, 2.0]).unwrap();
        assert!(c.exact && c.consistent && c.report.is_compatible());
        let c = lebesgue_exponent_check(1.0, &[3.0, 3.0]).unwrap();
        assert!(!c.exact && c.consistent && !c.report.is_compatible());
        assert!(c.report.witnesses.iter().any(|w| matches!(
            w.kind,
            WitnessKind::Divergence {
                end: GridEnd::Lower,
                ..
            }
        )));
        let c = lebesgue_exponent_check(2.0, &[4.0, 4.0]).unwrap();
        assert!(c.exact && c.consistent);
        assert!(lebesgue_exponent_check(0.5, &[1.0]).is_err());
        assert!(lebesgue_exponent_check(1.0, &[0.9]).is_err());
    }
}
