//! Table-sum verification for finite group character theory: exact
//! character tables, pi-partial characters, projective indecomposables,
//! bound certificates, and ingestion of externally computed tables.
//!
//! Exit codes: 0 all verdicts pass, 2 a theorem verdict fails,
//! 3 input or parse error.

mod analysis;
mod report;
mod table_file;

use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand};

use analysis::CliError;
use chillag_core::group::DEFAULT_CAP;
use report::{render_columns, render_crosscheck, render_verification};

#[derive(Parser)]
#[command(name = "chillag", about = "character table sum verification", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify table-sum theorems for catalog groups or generator lists.
    Analyze {
        /// Catalog name (e.g. S3) or cycle-notation generators
        /// (e.g. "(1,2,3); (1,2)").
        groups: Vec<String>,
        /// Prime set for the pi-partial sections, e.g. --pi 2,3.
        #[arg(long, value_delimiter = ',', conflicts_with = "p")]
        pi: Option<Vec<u64>>,
        /// Single prime p: analyze Brauer characters (pi = p-complement).
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Analyze multiple groups in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Parse and validate a table file, reporting its column sums.
    Ingest {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact column sums of a table file with rationality verdicts.
    Columns {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compare the seeded numeric eigensolver tables against the exact
    /// character-table data.
    Crosscheck {
        group: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

fn cap_from_env() -> u64 {
    std::env::var("CHILLAG_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    match e {
        CliError::Input(_) => ExitCode::from(3),
        CliError::Internal(_) => ExitCode::from(2),
    }
}

fn read_table(path: &PathBuf) -> Result<table_file::TableFile, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(3)
    })?;
    table_file::parse_table_file(&text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(3)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cap_from_env();
    match cli.cmd {
        Cmd::Analyze {
            groups,
            pi,
            p,
            json,
            seed,
            tol,
            jobs,
        } => {
            if groups.is_empty() {
                eprintln!("error: no group given");
                return ExitCode::from(3);
            }
            let jobs = jobs.max(1);
            let mut results = Vec::with_capacity(groups.len());
            for chunk in groups.chunks(jobs) {
                let handles: Vec<_> = chunk
                    .iter()
                    .map(|spec| {
                        let spec = spec.clone();
                        let pi = pi.clone();
                        thread::spawn(move || {
                            (spec.clone(), analysis::analyze(&spec, pi, p, seed, tol, cap))
                        })
                    })
                    .collect();
                for h in handles {
                    results.push(h.join().expect("analysis thread panicked"));
                }
            }
            let mut exit = 0u8;
            for (_, result) in &results {
                match result {
                    Ok((report, code)) => {
                        if json {
                            println!("{}", serde_json::to_string_pretty(report).unwrap());
                        } else {
                            print!("{}", render_verification(report));
                        }
                        exit = exit.max(*code as u8);
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        exit = exit.max(match e {
                            CliError::Input(_) => 3,
                            CliError::Internal(_) => 2,
                        });
                    }
                }
            }
            ExitCode::from(exit)
        }
        Cmd::Ingest { file, json } | Cmd::Columns { file, json } => match read_table(&file) {
            Ok(tf) => {
                let report = analysis::columns_report(&tf);
                if json {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                } else {
                    print!("{}", render_columns(&report));
                }
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Cmd::Crosscheck {
            group,
            json,
            seed,
            tol,
        } => match analysis::crosscheck(&group, seed, tol, cap) {
            Ok((report, code)) => {
                if json {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                } else {
                    print!("{}", render_crosscheck(&report));
                }
                ExitCode::from(code as u8)
            }
            Err(e) => fail(&e),
        },
    }
}
