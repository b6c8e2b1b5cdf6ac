//! JSON descriptions of Young functions, simple functions and Hölder systems.
//!
//! ```json
//! {"kind":"power","p":2}
//! {"kind":"hinge","a":1,"t0":1}
//! {"kind":"exp_power","p":1}
//! {"kind":"piecewise_linear","knots":[[0,0],[1,0],[2,2]]}
//! {"measures":[1,3],"values":[2,5]}
//! {"target":{"kind":"power","p":1},"factors":[{"kind":"power","p":2},{"kind":"power","p":2}]}
//! ```

use std::path::Path;

use orlicz_core::{Family, HolderSystem, SimpleFunction, YoungFunction};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum YoungSpec {
    Power { p: f64 },
    Hinge { a: f64, t0: f64 },
    ExpPower { p: f64 },
    PiecewiseLinear { knots: Vec<[f64; 2]> },
}

impl YoungSpec {
    pub fn build(&self) -> Result<YoungFunction, CliError> {
        let phi = match self {
            YoungSpec::Power { p } => YoungFunction::power(*p),
            YoungSpec::Hinge { a, t0 } => YoungFunction::hinge(*a, *t0),
            YoungSpec::ExpPower { p } => YoungFunction::exp_power(*p),
            YoungSpec::PiecewiseLinear { knots } => {
                YoungFunction::piecewise_linear(knots.iter().map(|k| (k[0], k[1])).collect())
            }
        };
        phi.map_err(CliError::from)
    }
}

impl From<&YoungFunction> for YoungSpec {
    fn from(phi: &YoungFunction) -> Self {
        match phi.family() {
            Family::Power { p } => YoungSpec::Power { p: *p },
            Family::Hinge { slope, threshold } => YoungSpec::Hinge {
                a: *slope,
                t0: *threshold,
            },
            Family::ExpPower { p } => YoungSpec::ExpPower { p: *p },
            Family::PiecewiseLinear(pl) => YoungSpec::PiecewiseLinear {
                knots: pl.knots().iter().map(|&(t, y)| [t, y]).collect(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimpleSpec {
    pub measures: Vec<f64>,
    pub values: Vec<f64>,
}

impl SimpleSpec {
    pub fn build(&self) -> Result<SimpleFunction, CliError> {
        SimpleFunction::new(self.measures.clone(), self.values.clone()).map_err(CliError::from)
    }
}

impl From<&SimpleFunction> for SimpleSpec {
    fn from(f: &SimpleFunction) -> Self {
        Self {
            measures: f.measures().to_vec(),
            values: f.values().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemSpec {
    pub target: YoungSpec,
    pub factors: Vec<YoungSpec>,
}

impl SystemSpec {
    pub fn build(&self) -> Result<HolderSystem, CliError> {
        let factors = self.factors.iter().map(YoungSpec::build).collect::<Result<_, _>>()?;
        HolderSystem::new(self.target.build()?, factors).map_err(CliError::from)
    }
}

/// Parses `arg` as inline JSON when it starts with `{`, otherwise reads it as a file path.
pub fn load<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))
            .map_err(|e| CliError::Input(format!("cannot read {what} file {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed {what} spec: {e}")))
}
