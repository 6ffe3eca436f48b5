use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

/// Exit code for a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit code for bad usage or a violated precondition.
pub const EXIT_USAGE: u8 = 1;
/// Exit code for a failed internal cross-check.
pub const EXIT_MISMATCH: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }
}

pub fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// What a command produced, before it is rendered.
#[derive(Debug, Default)]
pub struct Report {
    pub params: Map<String, Value>,
    pub result: Value,
    pub text: String,
    /// Set when a cross-check failed; the output is still printed.
    pub mismatch: Option<String>,
}

impl Report {
    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

/// The JSON record printed with `--format json`. Field order is fixed.
#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub params: Map<String, Value>,
    pub result: Value,
    pub elapsed_us: u64,
}

impl OutputRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records contain only JSON values")
    }
}
