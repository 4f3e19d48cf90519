//! Run reports: one document per command, rendered as text or JSON.
//!
//! Every entry names the property it checked through an anchor tag, e.g.
//! `contraction-closure` or `group-law`. Nothing time- or machine-dependent
//! goes in, so equal inputs and seeds give byte-identical output.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    /// A computed value that is not itself a pass/fail check.
    Info,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Entry {
    pub anchor: String,
    pub check: String,
    pub outcome: Outcome,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub input_digest: String,
    pub seed: u64,
    pub entries: Vec<Entry>,
    pub diagnostics: Vec<String>,
    pub status: Outcome,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: &str, input: &str, contents: &[u8], seed: u64) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            input_digest: sha256_hex(contents),
            seed,
            entries: Vec::new(),
            diagnostics: Vec::new(),
            status: Outcome::Pass,
        }
    }

    pub fn push(&mut self, anchor: &str, check: &str, outcome: Outcome, value: impl Into<Value>) {
        if outcome == Outcome::Fail {
            self.status = Outcome::Fail;
        }
        self.entries.push(Entry {
            anchor: anchor.into(),
            check: check.into(),
            outcome,
            value: value.into(),
        });
    }

    pub fn info(&mut self, anchor: &str, check: &str, value: impl Into<Value>) {
        self.push(anchor, check, Outcome::Info, value);
    }

    pub fn check(&mut self, anchor: &str, check: &str, ok: bool, value: impl Into<Value>) {
        self.push(anchor, check, Outcome::from_bool(ok), value);
    }

    pub fn diagnose(&mut self, message: impl Into<String>) {
        self.diagnostics.push(message.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Outcome::Pass
    }

    pub fn entry(&self, check: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}\nsha256 {}\nseed {}\n",
            self.command, self.input, self.input_digest, self.seed
        );
        for e in &self.entries {
            out.push_str(&format!(
                "[{}] {} ({}): {}\n",
                e.outcome.label(),
                e.check,
                e.anchor,
                compact(&e.value)
            ));
        }
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status.label()));
        out
    }
}

/// JSON without quotes around plain strings, for the text rendering.
fn compact(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", compact(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
