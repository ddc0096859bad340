//! Structured verdicts shared by every verification entry point.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub evidence: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub ring: Option<String>,
    pub checks: Vec<Check>,
    pub values: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, ring: Option<&str>) -> Self {
        Report {
            command: command.to_string(),
            ring: ring.map(str::to_string),
            checks: Vec::new(),
            values: Map::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, status: Status, evidence: impl Into<Value>) {
        self.checks.push(Check {
            name: name.into(),
            status,
            evidence: evidence.into(),
        });
    }

    pub fn pass_if(&mut self, name: impl Into<String>, ok: bool, evidence: impl Into<Value>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.check(name, status, evidence);
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    /// Worst status over all checks; an empty report passes.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", prefix, c.name);
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = self.command.to_string();
        if let Some(r) = &self.ring {
            out.push_str(&format!(" [{}]", r));
        }
        out.push('\n');
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            let ev = match &c.evidence {
                Value::Null => String::new(),
                Value::String(s) => format!(": {}", s),
                v => format!(": {}", v),
            };
            out.push_str(&format!("  {:<12} {}{}\n", tag, c.name, ev));
        }
        for (k, v) in &self.values {
            let s = match v {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            out.push_str(&format!("  {} = {}\n", k, s));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_status_wins() {
        let mut r = Report::new("x", None);
        assert!(r.passed());
        r.check("a", Status::Inconclusive, Value::Null);
        assert_eq!(r.status(), Status::Inconclusive);
        r.pass_if("b", false, "boom");
        assert_eq!(r.status(), Status::Fail);
        assert_eq!(r.failures().len(), 1);
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("validate", Some("dispin"));
        r.pass_if("shape", true, Value::Null);
        r.value("n", 3);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
