//! `psyt`: standard Young tableaux of periodic shape from the command line.

mod commands;
mod error;
mod fixtures;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "psyt", version, about = "Exact counts of standard Young tableaux on periodic shapes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Shape spec file (JSON with "cells" or "lambda"/"mu", optional "w"); `-` reads stdin
    #[arg(long, global = true)]
    spec: Option<PathBuf>,

    /// Shift number; overrides the spec's "w"
    #[arg(long, global = true)]
    w: Option<u32>,

    /// Machine-readable output
    #[arg(long, global = true)]
    json: bool,

    /// Largest shape whose tableaux are enumerated one by one
    #[arg(long, global = true, default_value_t = 22)]
    limit_cells: usize,

    /// Largest transfer matrix dimension to build
    #[arg(long, global = true, default_value_t = 200)]
    max_dim: usize,

    /// Report wall-clock time
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a period and render its derived shapes
    ShapeCheck,
    /// Count standard tableaux on n copies
    Count {
        /// A single n, or an inclusive range like 1..10
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, value_enum, default_value_t = Method::Transfer)]
        method: Method,
    },
    /// Print the transfer basis, matrix and initial vector
    Transfer {
        /// Also lump the system by the best redundant subset found
        #[arg(long)]
        compress: bool,
        /// Index shapes up to this size are searched exhaustively for redundant subsets
        #[arg(long, default_value_t = 12)]
        budget: usize,
        /// Rebuild by enumerating every tableau of the coefficient shape (bounded by --limit-cells) and compare
        #[arg(long)]
        cross_check: bool,
    },
    /// Characteristic polynomial, recurrences and their verification
    Recurrence {
        /// Number of transfer terms to generate (default 2 dim + 20)
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long)]
        compress: bool,
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
    /// Poset of standard tableaux of a plain shape
    Poset {
        /// Write a DOT digraph here (`-` for stdout)
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = 5000)]
        max_tableaux: usize,
    },
    /// Recompute the bundled reference data and compare
    Fixtures {
        /// Read fixture files from this directory instead of the bundled copies
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Transfer,
    Both,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad number {t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 || hi < lo {
        return Err(format!("range {s:?} must be positive and non-decreasing"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let ctx = commands::Context {
        spec: cli.spec.clone(),
        w: cli.w,
        limit_cells: cli.limit_cells,
        max_dim: cli.max_dim,
    };
    let result = match &cli.command {
        Command::ShapeCheck => commands::shape_check(&ctx),
        Command::Count { n, method } => commands::count(&ctx, *n, *method),
        Command::Transfer { compress, budget, cross_check } => {
            commands::transfer(&ctx, *compress, *budget, *cross_check)
        }
        Command::Recurrence { terms, compress, budget } => commands::recurrence(&ctx, *terms, *compress, *budget),
        Command::Poset { dot, max_tableaux } => commands::poset(&ctx, dot.as_deref(), *max_tableaux),
        Command::Fixtures { dir } => fixtures::run(dir.as_deref()),
    };
    match result {
        Ok(mut report) => {
            if cli.timing {
                let ms = start.elapsed().as_millis() as u64;
                report.set("timing_ms", ms);
                report.field("time", format!("{ms} ms"));
            }
            print!("{}", report.render(cli.json));
            ExitCode::from(report.failure.map_or(0, |k| k.code()))
        }
        Err(CliError { kind, message }) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": message, "exit_code": kind.code() }));
            }
            eprintln!("psyt: {message}");
            ExitCode::from(kind.code())
        }
    }
}
