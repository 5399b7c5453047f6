use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Text(String),
    Integer(u64),
    Bool(bool),
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Text(s) => s.clone(),
            Value::Integer(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
        }
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Integer(n as u64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub identity: String,
    pub status: Status,
}

/// Result of a job. Maps are key-sorted and rationals are `p/q` strings, so
/// identical jobs serialize to identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub genus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub params: BTreeMap<String, String>,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

impl ReportDocument {
    pub fn new(command: &str, genus: usize) -> Self {
        ReportDocument {
            command: command.to_string(),
            genus,
            fixture: None,
            seed: None,
            params: BTreeMap::new(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            checks: Vec::new(),
            verdict: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, identity: &str, holds: bool) {
        self.checks.push(Check {
            identity: identity.to_string(),
            status: if holds { Status::Pass } else { Status::Fail },
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "genus: {}", self.genus);
        if let Some(f) = &self.fixture {
            let _ = writeln!(out, "fixture: {f}");
        }
        if let Some(s) = self.seed {
            let _ = writeln!(out, "seed: {s}");
        }
        let section = |out: &mut String, title: &str, entries: Vec<(&String, String)>| {
            if entries.is_empty() {
                return;
            }
            let _ = writeln!(out, "{title}:");
            for (k, v) in entries {
                let _ = writeln!(out, "  {k}: {v}");
            }
        };
        section(
            &mut out,
            "params",
            self.params.iter().map(|(k, v)| (k, v.clone())).collect(),
        );
        section(
            &mut out,
            "inputs",
            self.inputs.iter().map(|(k, v)| (k, v.render())).collect(),
        );
        section(
            &mut out,
            "outputs",
            self.outputs.iter().map(|(k, v)| (k, v.render())).collect(),
        );
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(out, "  {tag} {}", c.identity);
            }
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(out, "verdict: {v}");
        }
        out
    }
}
