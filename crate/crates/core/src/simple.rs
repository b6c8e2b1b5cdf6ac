//! Nonnegative simple functions over a finite partition of abstract cells.
//!
//! Only the measures of the cells matter for every quantity computed here,
//! so a cell carries its measure and nothing else. The function is
//! `Σ vⱼ·χ_{cell j}` and vanishes off the partition.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Finite list of disjoint cells with positive finite measures.
#[derive(Debug, Clone)]
pub struct Partition {
    measures: Arc<[f64]>,
}

impl Partition {
    pub fn new(measures: Vec<f64>) -> Result<Self> {
        if measures.is_empty() {
            return Err(Error::InvalidFunction("partition must have at least one cell".into()));
        }
        if let Some(m) = measures.iter().find(|m| !(m.is_finite() && **m > 0.0)) {
            return Err(Error::InvalidFunction(format!(
                "cell measures must be finite and > 0, got {m}"
            )));
        }
        Ok(Self {
            measures: measures.into(),
        })
    }

    pub fn measures(&self) -> &[f64] {
        &self.measures
    }

    pub fn len(&self) -> usize {
        self.measures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.measures.is_empty()
    }

    pub fn total_measure(&self) -> f64 {
        self.measures.iter().sum()
    }
}

/// Two partitions are the same when they list identical cell measures in the
/// same order.
impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.measures, &other.measures) || self.measures == other.measures
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimpleFunction {
    partition: Partition,
    values: Vec<f64>,
}

impl SimpleFunction {
    /// Builds a function from cell measures and values. Values are stored as
    /// absolute values; negative inputs are folded to `|v|`.
    pub fn new(measures: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        Self::on(Partition::new(measures)?, values)
    }

    pub fn on(partition: Partition, values: Vec<f64>) -> Result<Self> {
        if values.len() != partition.len() {
            return Err(Error::InvalidFunction(format!(
                "values length {} does not match cell count {}",
                values.len(),
                partition.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidFunction(format!("values must be finite, got {v}")));
        }
        let values = values.into_iter().map(f64::abs).collect();
        Ok(Self { partition, values })
    }

    pub fn zero(partition: Partition) -> Self {
        let values = vec![0.0; partition.len()];
        Self { partition, values }
    }

    /// Indicator of the cells whose indices are listed in `cells`.
    pub fn indicator(partition: Partition, cells: &[usize]) -> Result<Self> {
        let mut values = vec![0.0; partition.len()];
        for &j in cells {
            *values
                .get_mut(j)
                .ok_or_else(|| Error::InvalidFunction(format!("cell index {j} out of range")))? = 1.0;
        }
        Ok(Self { partition, values })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn measures(&self) -> &[f64] {
        self.partition.measures()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// `c·f` for `c ≥ 0`.
    pub fn scaled(&self, c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::Domain(format!("scale factor must be finite and ≥ 0, got {c}")));
        }
        Ok(Self {
            partition: self.partition.clone(),
            values: self.values.iter().map(|v| v * c).collect(),
        })
    }

    /// `|{ f > t }|`, strict inequality.
    pub fn distribution(&self, t: f64) -> f64 {
        self.cells().filter(|&(_, v)| v > t).map(|(m, _)| m).sum()
    }

    /// `|{ f ≥ t }|`, non-strict inequality.
    pub fn superlevel_measure(&self, t: f64) -> f64 {
        self.cells().filter(|&(_, v)| v >= t).map(|(m, _)| m).sum()
    }

    /// Distinct positive values paired with their non-strict superlevel
    /// measures, in decreasing order of value.
    pub fn level_profile(&self) -> Vec<(f64, f64)> {
        let mut cells: Vec<(f64, f64)> = self.cells().filter(|&(_, v)| v > 0.0).collect();
        cells.sort_by(|a, b| b.1.total_cmp(&a.1));
        let mut out: Vec<(f64, f64)> = Vec::with_capacity(cells.len());
        let mut acc = 0.0;
        for (m, v) in cells {
            acc += m;
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 = acc,
                _ => out.push((v, acc)),
            }
        }
        out
    }

    fn cells(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.partition
            .measures()
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }
}

/// Cellwise product of functions on one shared partition.
pub fn product(fs: &[SimpleFunction]) -> Result<SimpleFunction> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::InvalidFunction("product of an empty list".into()))?;
    let mut values = first.values.clone();
    for f in rest {
        if f.partition != first.partition {
            return Err(Error::PartitionMismatch);
        }
        for (acc, v) in values.iter_mut().zip(&f.values) {
            *acc *= v;
        }
    }
    Ok(SimpleFunction {
        partition: first.partition.clone(),
        values,
    })
}

/// Open ball in `ℝⁿ`. The center does not affect any measure and is not stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ball {
    dimension: u32,
    radius: f64,
}

impl Ball {
    pub fn new(dimension: u32, radius: f64) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidFunction("ball dimension must be ≥ 1".into()));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidFunction(format!("ball radius must be > 0, got {radius}")));
        }
        Ok(Self { dimension, radius })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// `ωₙ·rⁿ` with `ωₙ = π^(n/2) / Γ(n/2 + 1)`.
    pub fn volume(&self) -> f64 {
        unit_ball_volume(self.dimension) * self.radius.powi(self.dimension as i32)
    }

    /// One-cell simple function equal to 1 on the ball.
    pub fn indicator(&self) -> SimpleFunction {
        SimpleFunction {
            partition: Partition {
                measures: vec![self.volume()].into(),
            },
            values: vec![1.0],
        }
    }
}

// ω₀ = 1, ω₁ = 2, ωₙ = ωₙ₋₂·2π/n
fn unit_ball_volume(n: u32) -> f64 {
    let mut omega = if n % 2 == 0 { 1.0 } else { 2.0 };
    let mut k = if n % 2 == 0 { 2 } else { 3 };
    while k <= n {
        omega *= 2.0 * PI / k as f64;
        k += 2;
    }
    omega
}
