//! The versioned JSON report.

use serde::Serialize;

use crate::exact_linear::Scalar;

use super::Instance;

/// Bumped whenever a field changes meaning or is removed.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct InstanceSummary {
    pub parts: Vec<usize>,
    pub origin: Vec<Scalar>,
    pub d: usize,
}

impl From<&Instance> for InstanceSummary {
    fn from(i: &Instance) -> Self {
        InstanceSummary {
            parts: i.diagram.parts().to_vec(),
            origin: i.origin.values().to_vec(),
            d: i.d,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedSuite {
    pub suite: String,
    pub reason: String,
}

/// The outcome of one suite. `measured` holds the suite-specific quantities;
/// for `all` it holds `{suites: [...], skipped: [...]}`.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub instance: InstanceSummary,
    pub pass: bool,
    pub measured: serde_json::Value,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
