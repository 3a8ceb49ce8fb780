#![allow(clippy::needless_range_loop)]

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cevian_core::{
    build_configuration, run_suite, Configuration, GeometryError, Status, Stratum, SuiteSummary,
    TheoremId,
};
use clap::{Parser, Subcommand};

mod derive;
mod document;
mod figure;

use document::ConfigDocument;

/// Exact cevian geometry: named points, theorem checks and figures.
#[derive(Parser, Debug)]
#[command(name = "cevian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every named point of a configuration as JSON.
    Derive {
        /// Configuration document, or `-` for standard input.
        #[arg(long)]
        input: String,
    },
    /// Run the theorem suite on sampled configurations.
    Check {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value = "generic", value_parser = parse_stratum)]
        stratum: Stratum,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_id)]
        ids: Option<Vec<TheoremId>>,
    },
    /// Render a figure of a configuration as SVG.
    Figure {
        #[arg(long)]
        input: String,
        #[arg(long)]
        figure: String,
        #[arg(long)]
        out: PathBuf,
    },
}

const THEOREM_FAILURE: u8 = 1;
const USAGE: u8 = 2;

fn parse_stratum(s: &str) -> Result<Stratum, String> {
    s.parse()
        .map_err(|_| "expected generic, on-steiner, p-infinite or on-median".to_string())
}

fn parse_id(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: GeometryError| e.to_string())
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load(path: &str) -> Result<(ConfigDocument, Configuration), String> {
    let doc = ConfigDocument::from_json(&read_input(path)?)?;
    let t = doc.triangle()?;
    let p = doc.point(&t)?;
    let cfg = build_configuration(&t, &p).map_err(|e| match e {
        GeometryError::HypothesisViolated(flags) => {
            format!("hypothesis violated: P lies on {flags}")
        }
        other => other.to_string(),
    })?;
    Ok((doc.canonical()?, cfg))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn cmd_derive(input: &str) -> ExitCode {
    let (input, cfg) = match load(input) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let mut doc = derive::derive_document(&cfg);
    doc["input"] = serde_json::to_value(&input).expect("json");
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
    ExitCode::SUCCESS
}

fn cmd_check(seed: u64, n: usize, stratum: Stratum, ids: Option<Vec<TheoremId>>) -> ExitCode {
    let reports = match run_suite(seed, n, stratum, ids.as_deref()) {
        Ok(r) => r,
        Err(e) => return usage_error(&e.to_string()),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for r in &reports {
        let _ = writeln!(out, "{r}");
    }
    let summary = SuiteSummary::of(&reports);
    let _ = writeln!(
        out,
        "summary: {summary} ({n} configurations, stratum {stratum}, seed {seed})"
    );
    let _ = out.flush();
    if reports.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(THEOREM_FAILURE)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_figure(input: &str, id: &str, out: &PathBuf) -> ExitCode {
    let (_, cfg) = match load(input) {
        Ok(c) => c,
        Err(e) => return usage_error(&e),
    };
    let svg = match figure::render(&cfg, id) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    if let Err(e) = fs::write(out, svg) {
        return usage_error(&format!("writing {}: {e}", out.display()));
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Derive { input } => cmd_derive(&input),
        Command::Check {
            seed,
            n,
            stratum,
            ids,
        } => cmd_check(seed, n, stratum, ids),
        Command::Figure { input, figure, out } => cmd_figure(&input, &figure, &out),
    }
}
