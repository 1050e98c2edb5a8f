//! Library side of the `qk` binary: argument types, file formats and the
//! subcommand implementations, kept separate so tests can drive them
//! without spawning a process.

pub mod check;
pub mod formats;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kquiver::engine::{cohomological_part, quiver_coefficients, table_for_pair};
use kquiver::quiver::{membership_table, Quiver};

use formats::{read_json, CoefficientOutput, OrbitFile, PairFile, QuiverFile, RepFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("malformed JSON in {0}: {1}")]
    Json(String, serde_json::Error),
    #[error(transparent)]
    Lib(#[from] kquiver::Error),
    #[error("{0}")]
    Usage(String),
}

/// Process exit status of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

#[derive(Debug, Parser)]
#[command(name = "qk", version, about = "K-theoretic quiver coefficients of Dynkin quiver orbits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Signs,
    OracleA3,
    Independence,
    Codim,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots of a Dynkin quiver
    Roots {
        quiver: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Orbits of a given dimension vector, as orbit files
    Orbits {
        quiver: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        dim: Vec<usize>,
    },
    /// Quiver coefficients of one orbit
    Coeffs {
        quiver: PathBuf,
        orbit: PathBuf,
        /// `auto` or a JSON file with an explicit resolution pair; the
        /// reported codimension is computed from that pair's tower
        #[arg(long, default_value = "auto")]
        pair: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Keep only the terms of degree equal to the codimension
        #[arg(long)]
        cohomological: bool,
    },
    /// Run a consistency check over every orbit up to a dimension bound
    Check {
        quiver: PathBuf,
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
    },
    /// Test whether a representation lies in an orbit closure (type A)
    Member {
        quiver: PathBuf,
        orbit: PathBuf,
        #[arg(long)]
        rep: PathBuf,
    },
}

fn load_quiver(path: &std::path::Path) -> Result<Quiver, CliError> {
    read_json::<QuiverFile>(path)?.to_quiver()
}

/// Runs one command, returning its stdout text.
pub fn run(cli: &Cli) -> Result<(String, Status), CliError> {
    if let Ok(v) = std::env::var("QK_MAX_DEPTH") {
        let limit = v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("QK_MAX_DEPTH must be a number, got {v:?}")))?;
        kquiver::gamma::set_max_depth(Some(limit));
    }
    match &cli.command {
        Command::Roots { quiver, format } => {
            let q = load_quiver(quiver)?;
            let roots: Vec<Vec<usize>> = q.positive_roots()?.into_iter().map(|r| r.0).collect();
            let out = match format {
                Format::Json => serde_json::to_string(&roots).expect("plain data serializes") + "\n",
                Format::Table => roots.iter().fold(String::new(), |mut s, r| {
                    let _ = writeln!(s, "{}", r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
                    s
                }),
            };
            Ok((out, Status::Ok))
        }
        Command::Orbits { quiver, dim } => {
            let q = load_quiver(quiver)?;
            let orbits: Vec<OrbitFile> = q.orbits(dim)?.iter().map(OrbitFile::from_orbit).collect();
            Ok((serde_json::to_string_pretty(&orbits).expect("plain data serializes") + "\n", Status::Ok))
        }
        Command::Coeffs { quiver, orbit, pair, format, cohomological } => {
            let q = load_quiver(quiver)?;
            let orbit = read_json::<OrbitFile>(orbit)?.to_orbit(&q)?;
            let e = orbit.dim().to_vec();
            let table = if pair == "auto" {
                quiver_coefficients(&q, &e, &orbit)?
            } else {
                let p = read_json::<PairFile>(&PathBuf::from(pair))?.to_pair()?;
                table_for_pair(&q, &e, &orbit, p)?
            };
            let tensor = if *cohomological { cohomological_part(&table) } else { table.tensor.clone() };
            let out = CoefficientOutput::new(&table, &tensor);
            let text = match format {
                Format::Json => out.to_json() + "\n",
                Format::Table => out.to_table(),
            };
            Ok((text, Status::Ok))
        }
        Command::Check { quiver, suite, max_dim } => {
            let q = load_quiver(quiver)?;
            let report = check::run_suite(&q, *suite, *max_dim)?;
            let status = if report.failures.is_empty() { Status::Ok } else { Status::CheckFailed };
            Ok((report.render(), status))
        }
        Command::Member { quiver, orbit, rep } => {
            let q = load_quiver(quiver)?;
            let orbit = read_json::<OrbitFile>(orbit)?.to_orbit(&q)?;
            let rep = read_json::<RepFile>(rep)?.to_rep(&q)?;
            let rows = membership_table(&q, &rep, &orbit)?;
            let table: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "root": r.root.as_slice(),
                        "candidate": r.candidate,
                        "orbit": r.orbit,
                        "holds": r.holds(),
                    })
                })
                .collect();
            let member = rows.iter().all(|r| r.holds());
            let out = serde_json::json!({ "member": member, "table": table });
            Ok((serde_json::to_string_pretty(&out).expect("plain data serializes") + "\n", Status::Ok))
        }
    }
}
