//! The report every command produces, and its text rendering. JSON and text
//! are both rendered from the same value, so they carry the same facts.

use std::fmt::Write;

use davis_core::cog::Violation;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A resource bound stopped the check before it could decide.
    Resource,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Resource => "RESOURCE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Individual axiom instances examined.
    pub checks: u64,
    pub violations: Vec<Violation>,
    pub note: Option<String>,
}

impl Check {
    pub fn from_report(name: &str, r: &davis_core::cog::Report) -> Self {
        Self {
            name: name.into(),
            status: if r.passed() { Status::Pass } else { Status::Fail },
            checks: r.checks,
            violations: r.violations.clone(),
            note: None,
        }
    }

    pub fn pass(name: &str, note: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Pass, checks: 1, violations: Vec::new(), note: Some(note.into()) }
    }

    pub fn fail(name: &str, axiom: &str, location: &str, details: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Fail,
            checks: 1,
            violations: vec![Violation { axiom: axiom.into(), location: location.into(), details: details.into() }],
            note: None,
        }
    }

    pub fn resource(name: &str, why: impl Into<String>) -> Self {
        Self { name: name.into(), status: Status::Resource, checks: 0, violations: Vec::new(), note: Some(why.into()) }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Self { title: title.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

/// Verbatim text such as a DOT export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    pub name: String,
    pub content: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    /// The command line that produced the report.
    pub invocation: Vec<String>,
    pub system: Option<String>,
    pub facts: Vec<Fact>,
    pub tables: Vec<Table>,
    pub artifacts: Vec<Artifact>,
    pub checks: Vec<Check>,
    pub status: Status,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn new(command: &str, invocation: Vec<String>, system: Option<String>) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            invocation,
            system,
            facts: Vec::new(),
            tables: Vec::new(),
            artifacts: Vec::new(),
            checks: Vec::new(),
            status: Status::Pass,
            elapsed_ms: 0,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push(Fact { key: key.into(), value: value.to_string() });
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|f| f.key == key).map(|f| f.value.as_str())
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Conjunction of the checks: any failure fails, otherwise any resource
    /// stop is reported as such.
    pub fn finish(&mut self, elapsed_ms: u64) {
        self.elapsed_ms = elapsed_ms;
        self.status = if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Resource) {
            Status::Resource
        } else {
            Status::Pass
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "davis {}", self.command);
        if let Some(s) = &self.system {
            let _ = writeln!(out, "system: {s}");
        }
        if !self.facts.is_empty() {
            let width = self.facts.iter().map(|f| f.key.len()).max().unwrap_or(0);
            out.push('\n');
            for f in &self.facts {
                let _ = writeln!(out, "  {:width$}  {}", f.key, f.value);
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "\n{} ({} rows)", t.title, t.rows.len());
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
            for r in &t.rows {
                for (w, cell) in widths.iter_mut().zip(r) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
                format!("  {}", padded.join("  ").trim_end())
            };
            let _ = writeln!(out, "{}", line(&t.columns));
            for r in &t.rows {
                let _ = writeln!(out, "{}", line(r));
            }
        }
        for a in &self.artifacts {
            let _ = writeln!(out, "\n{}:\n{}", a.name, a.content.trim_end());
        }
        if !self.checks.is_empty() {
            out.push_str("\nchecks\n");
            for c in &self.checks {
                let _ = write!(out, "  {:8} {} ({} checks)", c.status.label(), c.name, c.checks);
                if let Some(n) = &c.note {
                    let _ = write!(out, ": {n}");
                }
                out.push('\n');
                for v in &c.violations {
                    let _ = writeln!(out, "           [{}] at {}: {}", v.axiom, v.location, v.details);
                }
            }
        }
        let _ = writeln!(out, "\nstatus: {} ({} ms)", self.status.label().to_lowercase(), self.elapsed_ms);
        out
    }
}
