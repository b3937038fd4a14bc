use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wfu_core::search::ScanReport;
use wfu_core::{CriterionId, CriterionReport, Extraction, Lasso};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

/// `check`, `witness`, `scan` and `compare` emit one of these with
/// `--json`. Sections that do not apply to the command are `null`, so the
/// key set never varies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub tool_version: String,
    pub schema_version: u32,
    /// Hex SHA-256 of the input file, or of the scan configuration.
    pub input_digest: String,
    pub criteria: Vec<CriterionId>,
    pub seed: Option<u64>,
    pub exit_code: i32,
    pub check: Option<CriterionReport>,
    pub witness: Option<WitnessReport>,
    pub scan: Option<ScanReport>,
}

impl Report {
    pub fn new(command: &str, input_digest: String) -> Self {
        Report {
            command: command.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            schema_version: SCHEMA_VERSION,
            input_digest,
            criteria: Vec::new(),
            seed: None,
            exit_code: 0,
            check: None,
            witness: None,
            scan: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    /// Least cycle of `A | B | C`, as a node sequence.
    pub union_cycle: Option<Vec<usize>>,
    /// Greedy chain from the least immortal node.
    pub greedy: Option<Lasso>,
    pub extraction: Option<Extraction>,
    /// Why no extraction was attempted or completed.
    pub note: Option<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
