//! Front end for the `davis` binary: configuration, commands and reports.

pub mod commands;
pub mod config;
pub mod report;

use std::time::Instant;

use config::{Command, RunConfig};
use report::RunReport;

/// Runs one command. `Err` means the input could not be processed at all;
/// check failures and resource stops are recorded in the report.
pub fn run(cfg: &RunConfig) -> Result<RunReport, String> {
    cfg.validate()?;
    let start = Instant::now();
    let system = match cfg.command {
        Command::CatalogList => None,
        _ => Some(cfg.load_system()?.1),
    };
    let mut report = RunReport::new(cfg.command.name(), cfg.invocation.clone(), system);
    match cfg.command {
        Command::Check => commands::check(cfg, &mut report)?,
        Command::Build => commands::build(cfg, &mut report)?,
        Command::Verify => commands::verify(cfg, &mut report)?,
        Command::Covolume => commands::covolume(cfg, &mut report)?,
        Command::CatalogList => commands::catalog_list(&mut report),
    }
    report.finish(start.elapsed().as_millis() as u64);
    Ok(report)
}
