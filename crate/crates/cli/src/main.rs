use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use davis_cli::config::{Command, Format, Mutation, RunConfig, SystemSource};
use davis_cli::report::Status;
use davis_core::Bounds;

/// Builds and verifies chamber complexes, complexes of groups and
/// wreath-product lattices for a Coxeter system.
#[derive(Parser, Debug)]
#[command(name = "davis", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Nerve statistics, nondiscreteness, witnesses and the halvability table.
    Check,
    /// Builds Y_n and G(Y_n) and exports the dual graph.
    Build,
    /// Runs every axiom suite for Y_n, G(Y_n), the coverings and H(Z_n).
    Verify,
    /// Direct and series covolumes for n = 1..n-max.
    Covolume,
    /// Lists the built-in systems.
    CatalogList,
}

#[derive(Args, Debug)]
struct Opts {
    /// Coxeter system file.
    #[arg(long, global = true, conflicts_with = "catalog")]
    system: Option<PathBuf>,
    /// Catalog entry such as `example1(4,4)` or `petersen(4)`.
    #[arg(long, global = true)]
    catalog: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    n: usize,
    #[arg(long = "n-max", global = true, default_value_t = 1)]
    n_max: usize,
    /// Index into the witness list; the first witness by default.
    #[arg(long, global = true, default_value_t = 0)]
    witness: usize,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the parallel validators.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Corrupt one piece of data before `verify` checks it.
    #[arg(long, global = true, value_enum)]
    mutate: Option<MutateArg>,
    #[arg(long = "word-len", global = true)]
    word_len: Option<usize>,
    #[arg(long = "group-order", global = true)]
    group_order: Option<u64>,
    #[arg(long = "aut-vertices", global = true)]
    aut_vertices: Option<usize>,
    #[arg(long = "wreath-elements", global = true)]
    wreath_elements: Option<u64>,
    #[arg(long, global = true)]
    deductions: Option<usize>,
    #[arg(long = "dense-table", global = true)]
    dense_table: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FormatArg {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MutateArg {
    Twist,
    Covering,
}

fn config(cli: Cli) -> RunConfig {
    let o = cli.opts;
    let d = Bounds::default();
    RunConfig {
        command: match cli.command {
            Cmd::Check => Command::Check,
            Cmd::Build => Command::Build,
            Cmd::Verify => Command::Verify,
            Cmd::Covolume => Command::Covolume,
            Cmd::CatalogList => Command::CatalogList,
        },
        source: o.system.map(SystemSource::File).or(o.catalog.map(SystemSource::Catalog)),
        n: o.n,
        n_max: o.n_max,
        witness: o.witness,
        bounds: Bounds {
            word_len: o.word_len.unwrap_or(d.word_len),
            group_order: o.group_order.unwrap_or(d.group_order),
            aut_vertices: o.aut_vertices.unwrap_or(d.aut_vertices),
            wreath_elements: o.wreath_elements.unwrap_or(d.wreath_elements),
            deductions: o.deductions.unwrap_or(d.deductions),
            dense_table: o.dense_table.unwrap_or(d.dense_table),
        },
        format: match o.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
        out: o.out,
        mutate: o.mutate.map(|m| match m {
            MutateArg::Twist => Mutation::Twist,
            MutateArg::Covering => Mutation::Covering,
        }),
        invocation: std::env::args().collect(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.opts.jobs {
        if j == 0 {
            eprintln!("davis: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let cfg = config(cli);
    let report = match davis_cli::run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("davis: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = match cfg.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("davis: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    match report.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Resource => ExitCode::from(3),
    }
}
