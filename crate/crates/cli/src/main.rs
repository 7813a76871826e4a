//! `swl`: run verification suites on a `(λ, c, d)` instance and emit a JSON report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use swl_core::cli::config::{parse_origin, parse_parts};
use swl_core::cli::{run, CliError, InstanceConfig, RunOptions, SUITES};

#[derive(Parser)]
#[command(
    name = "swl",
    version,
    about = "Exact verification suites for higher-level Schur-Weyl duality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one suite, or `all`.
    Run(Box<RunArgs>),
    /// List the suite names.
    Suites,
}

#[derive(clap::Args)]
struct RunArgs {
    suite: String,
    /// Row lengths, e.g. `2,3,4`.
    #[arg(long)]
    parts: Option<String>,
    /// Column origin `c`, e.g. `0,1/2`; defaults to zeros.
    #[arg(long)]
    origin: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    /// Rows kept by `row-removal`.
    #[arg(long)]
    n_bar: Option<usize>,
    #[arg(long)]
    max_tensor_dim: Option<usize>,
    #[arg(long)]
    max_hecke_dim: Option<u128>,
    #[arg(long)]
    exact_limit: Option<usize>,
    /// JSON configuration file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Include every Ξ element with its coefficients.
    #[arg(long)]
    dump_xi: bool,
    /// Include the generator images as triplet lists.
    #[arg(long)]
    dump: bool,
}

fn config(args: &RunArgs) -> Result<InstanceConfig, CliError> {
    let file = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?;
            InstanceConfig::from_json(&text)?
        }
        None => InstanceConfig::default(),
    };
    let mut caps = file.caps.clone().unwrap_or_default();
    if let Some(v) = args.max_tensor_dim {
        caps.max_tensor_dim = v;
    }
    if let Some(v) = args.max_hecke_dim {
        caps.max_hecke_dim = v;
    }
    if let Some(v) = args.exact_limit {
        caps.exact_limit = v;
    }
    let flags = InstanceConfig {
        parts: args.parts.as_deref().map(parse_parts).transpose()?,
        origin: args.origin.as_deref().map(parse_origin).transpose()?,
        d: args.d,
        n_bar: args.n_bar,
        caps: Some(caps),
    };
    Ok(file.merged(flags))
}

fn execute(args: &RunArgs) -> Result<bool, CliError> {
    let inst = config(args)?.instance()?;
    let report = run(
        &args.suite,
        &inst,
        RunOptions {
            dump_xi: args.dump_xi,
            dump: args.dump,
        },
    )?;
    let text = report.to_json();
    match &args.json {
        Some(p) => std::fs::write(p, text + "\n")
            .map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?,
        None => println!("{text}"),
    }
    eprintln!(
        "{}: {}",
        report.suite,
        if report.pass { "pass" } else { "FAIL" }
    );
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Suites => {
            for s in SUITES.iter().chain(&["all"]) {
                println!("{s}");
            }
            ExitCode::SUCCESS
        }
        Command::Run(args) => match execute(&args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(e.exit_code() as u8)
            }
        },
    }
}
