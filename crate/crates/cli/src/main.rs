mod cli;
mod commands;
mod output;
mod settings;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Parser;
use serde_json::json;

use cli::{Cli, Command};
use output::{emit, sha256_hex, strip_timings, Manifest, Outcome, RunInfo, Status};
use settings::Settings;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Replay { manifest } => Settings::resolve(&cli.global).and_then(|s| replay(manifest, s.out)),
        _ => Settings::resolve(&cli.global).and_then(|s| execute(&cli.command, &argv[1..], s)),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e, &cli.global.out))
        }
    }
}

/// 1 for a failed verification (witness saved), 3 for an exhausted budget,
/// 2 for everything else.
fn error_code(e: &anyhow::Error, out: &Option<PathBuf>) -> u8 {
    match e.downcast_ref::<ordsize::Error>() {
        Some(ordsize::Error::Verification(msg)) => {
            let w = serde_json::to_string_pretty(&json!({"error": msg})).unwrap_or_default() + "\n";
            let path = match out {
                Some(dir) => dir.join("witnesses.json"),
                None => PathBuf::from("ordsize-witnesses.json"),
            };
            if std::fs::create_dir_all(path.parent().unwrap_or(Path::new("."))).and_then(|_| std::fs::write(&path, w)).is_ok() {
                eprintln!("witness saved to {}", path.display());
            }
            1
        }
        Some(ordsize::Error::BudgetExhausted(_)) => 3,
        _ => 2,
    }
}

fn execute(command: &Command, argv: &[String], s: Settings) -> Result<u8> {
    if let Some(t) = s.threads {
        // a second build (replay) keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    if s.seed_defaulted && commands::uses_seed(command) {
        eprintln!("no --seed given; using seed 0");
    }
    let start = Instant::now();
    let mut o: Outcome = commands::run(command, &s)?;
    let wall_seconds = start.elapsed().as_secs_f64();
    let timings = strip_timings(&mut o.report);
    eprintln!("finished in {wall_seconds:.3}s");
    emit(&o, RunInfo { argv, settings: &s, wall_seconds, timings })?;
    if o.status == Status::BudgetExhausted {
        eprintln!("budget exhausted; partial results reported");
    }
    Ok(o.status.code())
}

/// Re-runs a recorded command into a fresh directory and compares digests.
fn replay(manifest_path: &Path, out: Option<PathBuf>) -> Result<u8> {
    let text = std::fs::read_to_string(manifest_path).with_context(|| format!("reading {}", manifest_path.display()))?;
    let m: Manifest = serde_json::from_str(&text).context("parsing manifest")?;
    let argv: Vec<String> = std::iter::once("ordsize".to_string()).chain(m.command_line.iter().cloned()).collect();
    let cli = Cli::try_parse_from(&argv).context("recorded command line no longer parses")?;
    if matches!(cli.command, Command::Replay { .. }) {
        bail!(ordsize::Error::invalid("a manifest cannot record a replay"));
    }
    let dir = out.unwrap_or_else(|| manifest_path.parent().unwrap_or(Path::new(".")).join("replay"));
    if m.settings.out.as_deref() == Some(dir.as_path()) {
        bail!(ordsize::Error::invalid("replay directory equals the recorded output directory"));
    }
    let mut settings = m.settings.clone();
    settings.out = Some(dir.clone());
    let code = execute(&cli.command, &m.command_line, settings)?;
    let mut mismatched = Vec::new();
    for (name, want) in &m.outputs {
        let got = std::fs::read(dir.join(name)).map(|b| sha256_hex(&b)).unwrap_or_default();
        if &got != want {
            mismatched.push(name.clone());
        }
    }
    if code != m.exit_code {
        eprintln!("exit code {code}, recorded {}", m.exit_code);
    }
    if mismatched.is_empty() && code == m.exit_code {
        eprintln!("replay identical: {} files match", m.outputs.len());
        Ok(0)
    } else {
        eprintln!("replay differs: {mismatched:?}");
        Ok(1)
    }
}
