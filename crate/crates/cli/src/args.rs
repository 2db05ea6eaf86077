use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use zdg_core::CheckKind;

#[derive(Debug, Parser)]
#[command(
    name = "zdg",
    version,
    about = "Query and cross-check zero-divisor graphs of Z_n"
)]
pub struct Cli {
    /// Which engine answers queries. Defaults to `both` when n is within the
    /// oracle cap, `theorem` otherwise.
    #[arg(long, global = true, value_enum)]
    pub method: Option<Method>,

    /// Output format. `dot` and `csv` are only valid for `export`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Largest n the brute-force oracle may handle. Overrides ZDG_ORACLE_MAX_N.
    #[arg(long, global = true, value_name = "N")]
    pub oracle_max_n: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Theorem,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary of the graph: size, factorization, diameter, center.
    Info { n: u64 },
    /// Neighbours of vertex `a`.
    Neighbors { n: u64, a: u64 },
    /// Degree of vertex `a`.
    Degree { n: u64, a: u64 },
    /// Shortest-path distance between vertices `a` and `b`.
    Distance { n: u64, a: u64, b: u64 },
    /// All cut edges (bridges).
    CutEdges { n: u64 },
    /// The center: vertices of minimum eccentricity.
    Center { n: u64 },
    /// Write the graph as DOT, JSON or CSV.
    Export {
        n: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Sweep a range of n through both engines and report disagreements.
    Verify {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        /// Comma-separated checks; all of them when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        check: Vec<CheckKind>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the JSON report.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse::<CheckKind>().map_err(|e| {
        let names: Vec<&str> = CheckKind::ALL.iter().map(|c| c.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}
