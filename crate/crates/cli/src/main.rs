//! Command-line front end: parse configuration documents, dispatch to the
//! library, and emit human-readable or machine-readable reports.
//!
//! # Conventions
//!
//! * Configurations are TOML documents (see the repository README for the
//!   schema); reports are JSON when `--json` is passed.
//! * Exit codes: `0` success, `1` assertion failure, `2` parse error,
//!   `3` semantic error. Argument errors from the flag parser also exit `2`.
//! * A report is printed even when it records a failed assertion; the
//!   failure summary goes to stderr and the exit code to the shell.
//!
//! # Invariants
//!
//! Identical invocations print byte-identical `--json` output; every JSON
//! report can be re-verified with `germlct check <report.json>`.

mod error;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use germlct::{ConfigFile, GenSpec};

use error::CliError;
use report::{Options, Report, ScenarioInput};

#[derive(Parser)]
#[command(
    name = "germlct",
    version,
    about = "Exact local invariants of weighted plane-curve germs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit the report as JSON on stdout.
    #[arg(long)]
    json: bool,
    /// Cap on the blow-up depth of the resolution oracle.
    #[arg(long, value_name = "N")]
    depth_cap: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Log canonical threshold of the configured divisor at the origin
    /// (with a [family] block: the threshold of the family curve instead).
    Lct {
        /// TOML configuration file.
        config: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Log-canonicality verdict for the configured divisor at the origin.
    Loglc {
        config: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Intersection multiplicity of the two configured divisor curves.
    Imult {
        config: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Evaluate the local bound predicates on the configured two-branch
    /// pair.
    Theorem {
        config: PathBuf,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Audit the built-in catalog of proof-branch inequality systems.
    Audit {
        /// Emit the report as JSON on stdout.
        #[arg(long)]
        json: bool,
    },
    /// Run the worked-example scenarios against the oracle.
    Scenario {
        /// Registry name of a single scenario to run (default: all).
        #[arg(long, value_name = "NAME")]
        scenario: Option<String>,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Run a deterministic generation campaign against the oracle.
    Fuzz {
        /// Campaign seed.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of configurations to generate.
        #[arg(long, default_value_t = 500)]
        count: u32,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Re-verify a JSON report by re-running it from its embedded input.
    Check {
        /// Report file produced by a `--json` run.
        report: PathBuf,
    },
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read `{}`: {e}", path.display())))
}

fn load_config(path: &Path) -> Result<ConfigFile, CliError> {
    Ok(ConfigFile::from_toml_str(&read_to_string(path)?)?)
}

/// Print the report, then surface any failed assertion as the exit status.
fn emit(report: Report, json: bool) -> Result<(), CliError> {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report::render_human(&report));
    }
    match report.assertion_failure() {
        Some(msg) => Err(CliError::Assertion(msg)),
        None => Ok(()),
    }
}

fn run_check(path: &Path) -> Result<(), CliError> {
    let text = read_to_string(path)?;
    let stored: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Parse(format!("`{}`: {e}", path.display())))?;
    let recomputed = report::recompute(&stored)?;
    let fresh = serde_json::to_value(&recomputed).expect("reports always serialize");
    if fresh == stored {
        let kind = stored.get("kind").and_then(|k| k.as_str()).unwrap_or("?");
        println!(
            "verified: `{}` matches a fresh recomputation (kind: {kind})",
            path.display()
        );
        Ok(())
    } else {
        Err(CliError::Assertion(format!(
            "`{}` differs from a fresh recomputation of its embedded input",
            path.display()
        )))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Lct { config, flags } => {
            let report =
                report::build_lct(load_config(&config)?, Options::with_depth_cap(flags.depth_cap))?;
            emit(report, flags.json)
        }
        Command::Loglc { config, flags } => {
            let report = report::build_loglc(
                load_config(&config)?,
                Options::with_depth_cap(flags.depth_cap),
            )?;
            emit(report, flags.json)
        }
        Command::Imult { config, flags } => {
            let report = report::build_imult(
                load_config(&config)?,
                Options::with_depth_cap(flags.depth_cap),
            )?;
            emit(report, flags.json)
        }
        Command::Theorem { config, flags } => {
            let report = report::build_theorem(
                load_config(&config)?,
                Options::with_depth_cap(flags.depth_cap),
            )?;
            emit(report, flags.json)
        }
        Command::Audit { json } => emit(report::build_audit(), json),
        Command::Scenario { scenario, flags } => {
            let input =
                ScenarioInput { scenario: scenario.unwrap_or_else(|| "all".to_string()) };
            let report =
                report::build_scenario(input, Options::with_depth_cap(flags.depth_cap))?;
            emit(report, flags.json)
        }
        Command::Fuzz { seed, count, flags } => {
            let spec = GenSpec::new(seed, count);
            let report = report::build_fuzz(spec, Options::with_depth_cap(flags.depth_cap));
            emit(report, flags.json)
        }
        Command::Check { report } => run_check(&report),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
