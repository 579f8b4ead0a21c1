use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Failed,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldCheck {
    pub prime: u64,
    /// `agrees`, `differs` or `unavailable`.
    pub outcome: String,
    pub differences: Vec<String>,
}

/// The outcome of one command. Everything in it is exact and ordered, so the
/// JSON rendering is byte-for-byte reproducible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub summary: String,
    pub dims: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub details: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_check: Option<FieldCheck>,
}

impl Report {
    pub fn new(summary: impl Into<String>) -> Self {
        Report {
            command: String::new(),
            status: Status::Ok,
            summary: summary.into(),
            dims: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            details: BTreeMap::new(),
            field_check: None,
        }
    }

    pub(crate) fn usage_error(command: &str, message: &str) -> Self {
        let mut r = Report::new(format!("usage error: {message}"));
        r.command = command.to_string();
        r.status = Status::Error;
        r
    }

    pub(crate) fn math_error(command: &str, kind: &str, message: &str) -> Self {
        let mut r = Report::new(format!("{kind}: {message}"));
        r.command = command.to_string();
        r.status = Status::Failed;
        r.details.insert("error".into(), Value::String(kind.to_string()));
        r
    }

    pub fn dim(&mut self, name: &str, value: usize) {
        self.dims.insert(name.to_string(), value);
    }

    /// Records a check; a failing check marks the report failed.
    pub fn check(&mut self, name: impl Into<String>, holds: bool) -> bool {
        if !holds {
            self.status = Status::Failed;
        }
        self.checks.push(Check { name: name.into(), holds });
        holds
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(key.to_string(), serde_json::to_value(value).expect("report values serialize"));
    }

    /// Absorbs another report's checks, dimensions and notes under a prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let unexplained = other.status == Status::Failed && other.checks.iter().all(|c| c.holds);
        for (k, v) in other.dims {
            self.dims.insert(format!("{prefix}.{k}"), v);
        }
        for c in other.checks {
            self.check(format!("{prefix}: {}", c.name), c.holds);
        }
        if unexplained {
            self.check(format!("{prefix}: {}", other.summary), false);
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub(crate) fn attach_field_check(&mut self, prime: u64, outcome: Result<BTreeMap<String, usize>, String>) {
        let fc = match outcome {
            Err(reason) => FieldCheck { prime, outcome: "unavailable".into(), differences: vec![reason] },
            Ok(dims) => {
                let keys: std::collections::BTreeSet<&String> = self.dims.keys().chain(dims.keys()).collect();
                let differences: Vec<String> = keys
                    .into_iter()
                    .filter(|k| self.dims.get(*k) != dims.get(*k))
                    .map(|k| format!("{k}: {:?} over the input field, {:?} mod {prime}", self.dims.get(k), dims.get(k)))
                    .collect();
                let outcome = if differences.is_empty() { "agrees" } else { "differs" };
                FieldCheck { prime, outcome: outcome.into(), differences }
            }
        };
        self.field_check = Some(fc);
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
            s.push('\n');
            return s;
        }
        let mut out = String::new();
        let _ = writeln!(out, "{}: {}", self.command, self.summary);
        for (k, v) in &self.dims {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.name);
        }
        for n in &self.notes {
            let _ = writeln!(out, "  {n}");
        }
        if let Some(fc) = &self.field_check {
            let _ = writeln!(out, "  field check mod {}: {}", fc.prime, fc.outcome);
            for d in &fc.differences {
                let _ = writeln!(out, "    {d}");
            }
        }
        out
    }
}
