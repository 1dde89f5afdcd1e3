//! Verification reports, the configuration format, and the subcommand runner.

mod config;
mod run;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub use config::*;
pub use run::{run_subcommand, RunFlags, SUBCOMMANDS};

use crate::ledger::Provenance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A stated value differs from the recomputed one.
    Discrepancy,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISC",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub inputs: Value,
    pub expected: Option<Value>,
    pub provenance: Provenance,
    pub computed: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

/// Non-canonical extras; kept out of [`VerificationReport::canonical_json`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub generated_at_unix: u64,
    pub config_source: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub toolkit_version: String,
    pub subcommand: String,
    pub mode: crate::ledger::Mode,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl VerificationReport {
    pub fn new(subcommand: &str, mode: crate::ledger::Mode, records: Vec<CheckRecord>) -> Self {
        let mut summary = Summary { total: records.len(), ..Summary::default() };
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Discrepancy => summary.discrepancy += 1,
            }
        }
        Self {
            toolkit_version: crate::TOOLKIT_VERSION.to_string(),
            subcommand: subcommand.to_string(),
            mode,
            records,
            summary,
            metadata: None,
        }
    }

    /// `0` all pass, `1` discrepancies only, `2` any failure. Input errors (`3`) never produce a report.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if !strict {
            0
        } else if self.summary.fail > 0 {
            2
        } else if self.summary.discrepancy > 0 {
            1
        } else {
            0
        }
    }

    /// Pretty JSON without metadata; identical input gives identical bytes.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.metadata = None;
        let mut s = serde_json::to_string_pretty(&copy).expect("report values are plain data");
        s.push('\n');
        s
    }

    /// JSON including metadata when present.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report values are plain data");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "prymcheck {} {} (mode: {})", self.toolkit_version, self.subcommand, self.mode);
        for r in &self.records {
            let _ = write!(out, "{:<5} {}  computed={}", r.status.tag(), r.name, compact(&r.computed));
            if let Some(e) = &r.expected {
                let _ = write!(out, " expected={} [{}]", compact(e), r.provenance);
            }
            out.push('\n');
            for n in &r.notes {
                let _ = writeln!(out, "      note: {n}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} checks: {} pass, {} fail, {} discrepancy", s.total, s.pass, s.fail, s.discrepancy);
        out
    }

    pub fn record(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
