use std::fmt;

use serde::{Deserialize, Serialize};

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub location: String,
    pub details: String,
}

/// Outcome of a validator: a list of violations, empty on success.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub violations: Vec<Violation>,
    /// Number of individual checks performed.
    pub checks: u64,
}

/// Violations beyond this many are counted but not stored.
const KEEP: usize = 200;

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn check(&mut self, ok: bool, axiom: &str, location: impl FnOnce() -> String, details: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(axiom, location(), details());
        }
    }

    pub fn fail(&mut self, axiom: &str, location: String, details: String) {
        if self.violations.len() < KEEP {
            self.violations.push(Violation { axiom: axiom.to_string(), location, details });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        for v in other.violations {
            if self.violations.len() < KEEP {
                self.violations.push(v);
            }
        }
    }

    pub fn has_axiom(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "pass ({} checks)", self.checks);
        }
        writeln!(f, "FAIL ({} violations shown, {} checks)", self.violations.len(), self.checks)?;
        for v in self.violations.iter().take(10) {
            writeln!(f, "  [{}] at {}: {}", v.axiom, v.location, v.details)?;
        }
        Ok(())
    }
}
