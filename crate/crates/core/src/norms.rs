//! Modular, Luxemburg norm and weak Orlicz quasi-norm of simple functions.
//!
//! Both norms are infima of feasible scale parameters `b`:
//!
//! * strong: `modular(b) = Σ μⱼ Φ(vⱼ/b) ≤ 1`;
//! * weak: `weak_sup(b) = sup_t Φ(t)·|{ f/b > t }| ≤ 1`.
//!
//! Each predicate is monotone in `b`, so the norm is found by bisecting on the
//! predicate itself rather than solving `modular(b) = 1`, which may have no
//! solution when `Φ` has flat pieces.

use serde::Serialize;

use crate::bisect::{infimum_of_feasible, Bracket};
use crate::error::{Error, Result};
use crate::simple::SimpleFunction;
use crate::young::YoungFunction;

/// A computed norm with the evidence of its bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormResult {
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
    /// The defining functional (modular or weak supremum) at `value`.
    pub residual_modular: f64,
}

impl NormResult {
    fn zero() -> Self {
        Self {
            value: 0.0,
            bracket_lo: 0.0,
            bracket_hi: 0.0,
            iterations: 0,
            residual_modular: 0.0,
        }
    }

    fn from_bracket(b: Bracket, residual: f64) -> Self {
        Self {
            value: b.hi,
            bracket_lo: b.lo,
            bracket_hi: b.hi,
            iterations: b.iterations,
            residual_modular: residual,
        }
    }
}

fn check_scale(b: f64) -> Result<()> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::Domain(format!("scale b must be finite and > 0, got {b}")));
    }
    Ok(())
}

/// `Σ μⱼ Φ(vⱼ/b)`.
pub fn modular(phi: &YoungFunction, f: &SimpleFunction, b: f64) -> Result<f64> {
    check_scale(b)?;
    Ok(modular_unchecked(phi, f, b))
}

fn modular_unchecked(phi: &YoungFunction, f: &SimpleFunction, b: f64) -> f64 {
    f.measures()
        .iter()
        .zip(f.values())
        .filter(|(_, &v)| v > 0.0)
        .map(|(m, v)| m * phi.value(v / b))
        .sum()
}

/// `inf { b > 0 : Σ μⱼ Φ(vⱼ/b) ≤ 1 }`. The zero function has norm 0.
pub fn luxemburg_norm(phi: &YoungFunction, f: &SimpleFunction) -> NormResult {
    if f.is_zero() {
        return NormResult::zero();
    }
    let bracket = infimum_of_feasible(|b| modular_unchecked(phi, f, b) <= 1.0)
        .expect("modular of a simple function tends to 0 as b grows");
    NormResult::from_bracket(bracket, modular_unchecked(phi, f, bracket.hi))
}

/// `sup_{t>0} Φ(t)·|{ f/b > t }|`.
///
/// The distribution function is a right-continuous step function and `Φ` is
/// continuous, so on each interval where the level set is constant the
/// supremum is the left limit at the interval's right end. This gives
/// `max_v Φ(v/b)·|{ f ≥ v }|` over the distinct positive values `v`.
pub fn weak_sup(phi: &YoungFunction, f: &SimpleFunction, b: f64) -> Result<f64> {
    check_scale(b)?;
    Ok(weak_sup_unchecked(phi, &f.level_profile(), b))
}

fn weak_sup_unchecked(phi: &YoungFunction, profile: &[(f64, f64)], b: f64) -> f64 {
    profile.iter().map(|&(v, s)| phi.value(v / b) * s).fold(0.0, f64::max)
}

/// `inf { b > 0 : weak_sup(b) ≤ 1 }`. The zero function has norm 0.
pub fn weak_norm(phi: &YoungFunction, f: &SimpleFunction) -> NormResult {
    if f.is_zero() {
        return NormResult::zero();
    }
    let profile = f.level_profile();
    let bracket = infimum_of_feasible(|b| weak_sup_unchecked(phi, &profile, b) <= 1.0)
        .expect("weak supremum of a simple function tends to 0 as b grows");
    NormResult::from_bracket(bracket, weak_sup_unchecked(phi, &profile, bracket.hi))
}

fn check_lebesgue_exponent(p: f64) -> Result<()> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::Domain(format!(
            "Lebesgue exponent must be finite and ≥ 1, got {p}"
        )));
    }
    Ok(())
}

/// `(Σ μⱼ vⱼ^p)^(1/p)`.
pub fn lp_norm(p: f64, f: &SimpleFunction) -> Result<f64> {
    check_lebesgue_exponent(p)?;
    let top = f.max_value();
    if top == 0.0 {
        return Ok(0.0);
    }
    let sum: f64 = f
        .measures()
        .iter()
        .zip(f.values())
        .map(|(m, v)| m * (v / top).powf(p))
        .sum();
    Ok(top * sum.powf(p.recip()))
}

/// `max_v v·|{ f ≥ v }|^(1/p)`, the weak-`L^p` quasi-norm in closed form.
pub fn wlp_norm(p: f64, f: &SimpleFunction) -> Result<f64> {
    check_lebesgue_exponent(p)?;
    Ok(f.level_profile()
        .into_iter()
        .map(|(v, s)| v * s.powf(p.recip()))
        .fold(0.0, f64::max))
}
