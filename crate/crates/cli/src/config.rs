use std::path::PathBuf;
use std::sync::Arc;

use davis_core::coxeter::{parse_system, CoxeterSystem};
use davis_core::nerve::catalog_from_spec;
use davis_core::Bounds;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Build,
    Verify,
    Covolume,
    CatalogList,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Build => "build",
            Command::Verify => "verify",
            Command::Covolume => "covolume",
            Command::CatalogList => "catalog-list",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemSource {
    File(PathBuf),
    Catalog(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Deliberate corruptions for exercising the verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Replace one twist element of `H(Z_n)`.
    Twist,
    /// Force one `Ad(s)` element of `Φ_n` to the identity.
    Covering,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub source: Option<SystemSource>,
    pub n: usize,
    pub n_max: usize,
    pub witness: usize,
    pub bounds: Bounds,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub mutate: Option<Mutation>,
    pub invocation: Vec<String>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 || self.n_max == 0 {
            return Err("n and n-max must be at least 1".into());
        }
        let b = &self.bounds;
        if b.word_len == 0
            || b.group_order == 0
            || b.aut_vertices == 0
            || b.wreath_elements == 0
            || b.deductions == 0
            || b.dense_table == 0
        {
            return Err("bounds must be positive".into());
        }
        if self.command != Command::CatalogList && self.source.is_none() {
            return Err(format!("{} needs --system FILE or --catalog NAME(args)", self.command.name()));
        }
        Ok(())
    }

    /// Loads the system and a human-readable name for it.
    pub fn load_system(&self) -> Result<(Arc<CoxeterSystem>, String), String> {
        match self.source.as_ref().ok_or("no system given")? {
            SystemSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                let sys = parse_system(&text).map_err(|e| format!("{}: {e}", path.display()))?;
                Ok((Arc::new(sys), path.display().to_string()))
            }
            SystemSource::Catalog(spec) => {
                let entry = catalog_from_spec(spec).map_err(|e| e.to_string())?;
                let params: Vec<String> = entry.params.iter().map(|p| p.to_string()).collect();
                Ok((Arc::new(entry.system), format!("{}({})", entry.name, params.join(","))))
            }
        }
    }
}
