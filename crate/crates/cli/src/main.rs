//! `bivarieg`: checks, solvers, degree sequences, spectra and scans for
//! bivariegated graphs and line graphs.
//!
//! Exit codes: 0 the property holds or a solution was found, 1 it fails or
//! no solution exists, 2 bad input or usage, 3 a resource cap was hit.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bivarieg_core::degseq::DegreeSequence;
use bivarieg_core::scan::ScanProperty;
use bivarieg_core::{Error, Limits};
use clap::{Parser, Subcommand};

use commands::Report;
use input::GraphInput;

const CYCLE_CAP_VAR: &str = "BIVARIEG_CYCLE_CAP";

#[derive(Debug, Parser)]
#[command(name = "bivarieg", version, about = "Bivariegated graphs and line graphs")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide a graph property.
    #[command(subcommand)]
    Check(Check),

    /// Build L(G), or L^k(G) with `--iterate k`.
    Linegraph {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1, value_name = "K")]
        iterate: usize,
    },

    /// Solve a line-graph equation for the given graph.
    #[command(subcommand)]
    Solve(Solve),

    /// Test whether L(G) = G with G bivariegated.
    FixedPoint {
        #[command(flatten)]
        input: GraphInput,
    },

    /// Degree sequences of bivariegated line graphs.
    #[command(subcommand)]
    Degseq(Degseq),

    /// Verify the spectrum of two copies of K_n joined by a perfect matching.
    Spectra {
        #[arg(long)]
        n: usize,
        /// Include the adjacency matrix.
        #[arg(long)]
        dump: bool,
    },

    /// Run a property over every small graph.
    Scan {
        property: ScanProperty,
        /// Upper bound on the order (edge count for `theorem1_equiv`, n for `thm21_forward`).
        #[arg(long)]
        max_order: usize,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write counterexamples as graph6 lines.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Is the graph bivariegated? Prints a certificate when it is.
    Biv {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Is the graph a line graph? Prints a Krausz partition and root when it is.
    Line {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Debug, Subcommand)]
enum Solve {
    /// Is L(G) bivariegated? Reports the path decomposition and certificate.
    Lg {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Are G and L(G) both bivariegated?
    Nested {
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Debug, Subcommand)]
enum Degseq {
    /// Is the sequence potentially bivariegated line graphic?
    Check { sequence: DegreeSequence },
    /// Realize the sequence as a bivariegated line graph.
    Realize {
        sequence: DegreeSequence,
        /// Matching between the sides, e.g. `1,0,2`; identity by default.
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
    },
    /// List the admissible partitions of 2n.
    Partitions {
        #[arg(long)]
        n: usize,
    },
    /// Is every realization a bivariegated line graph?
    Forcibly {
        sequence: DegreeSequence,
        /// Also enumerate every realization and test each one.
        #[arg(long)]
        oracle: bool,
    },
}

/// Errors carry their exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_resource() { 3 } else { 2 },
            message: e.to_string(),
        }
    }
}

fn limits() -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var(CYCLE_CAP_VAR) {
        limits.cycle_cap = v.trim().parse().map_err(|_| Failure {
            code: 2,
            message: format!("{CYCLE_CAP_VAR} must be a non-negative integer, got {v:?}"),
        })?;
    }
    Ok(limits)
}

fn run(command: Command) -> Result<(Report, u8), Failure> {
    let limits = limits()?;
    let report = match command {
        Command::Check(Check::Biv { input }) => commands::check_bivariegated(&input.load()?)?,
        Command::Check(Check::Line { input }) => commands::check_line(&input.load()?)?,
        Command::Linegraph { input, iterate } => commands::linegraph(&input.load()?, iterate, &limits)?,
        Command::Solve(Solve::Lg { input }) => commands::solve_lg(&input.load()?, &limits)?,
        Command::Solve(Solve::Nested { input }) => commands::solve_nested(&input.load()?, &limits)?,
        Command::FixedPoint { input } => commands::fixed_point(&input.load()?)?,
        Command::Degseq(Degseq::Check { sequence }) => commands::degseq_check(sequence)?,
        Command::Degseq(Degseq::Realize { sequence, perm }) => {
            commands::degseq_realize(sequence, perm.as_deref())?
        }
        Command::Degseq(Degseq::Partitions { n }) => commands::degseq_partitions(n)?,
        Command::Degseq(Degseq::Forcibly { sequence, oracle }) => commands::degseq_forcibly(sequence, oracle)?,
        Command::Spectra { n, dump } => commands::spectra(n, dump)?,
        Command::Scan {
            property,
            max_order,
            jobs,
            export,
        } => {
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if jobs == 0 {
                return Err(Error::InvalidInput("--jobs must be at least 1".into()).into());
            }
            let out = commands::run_scan(property, max_order, jobs, &limits, export.as_deref())?;
            let code = if out.capped { 3 } else { u8::from(!out.report.holds) };
            return Ok((out.report, code));
        }
    };
    let code = u8::from(!report.holds);
    Ok((report, code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((report, code)) => {
            let body = if cli.json { &report.json } else { &report.text };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
