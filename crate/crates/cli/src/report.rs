//! The JSON document every report-producing command emits.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FORMAT: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub format: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Every option the command ran with, defaults included.
    pub parameters: BTreeMap<String, Value>,
    /// SHA-256 of each input's canonical JSON, keyed by flag name.
    pub inputs: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub results: Value,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        Self {
            format: FORMAT,
            tool: "orlicz",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            inputs: BTreeMap::new(),
            seed: None,
            results: Value::Null,
        }
    }

    pub fn parameter(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(
            name.to_string(),
            serde_json::to_value(value).expect("serializable parameter"),
        );
        self
    }

    /// Records the digest of a parsed input, so that formatting differences in
    /// the source text do not change the report.
    pub fn input(&mut self, name: &str, spec: &impl Serialize) -> &mut Self {
        let canonical = serde_json::to_string(spec).expect("serializable spec");
        self.inputs
            .insert(name.to_string(), hex::encode(Sha256::digest(canonical.as_bytes())));
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable report");
        text.push('\n');
        text
    }
}
