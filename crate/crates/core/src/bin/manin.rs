use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use manin::scenario::{self, ScenarioReport, EXIT_PARSE};

/// Run JSON scenarios and write a deterministic JSON report.
///
/// Exit codes: 0 all commands pass, 1 a command fails, 2 a scenario does not
/// parse, 3 a scenario does not validate. With several scenarios the largest
/// code wins.
#[derive(Parser, Debug)]
#[command(name = "manin", version)]
struct Args {
    /// Scenario file; repeat for a batch.
    #[arg(long = "scenario", required = true)]
    scenarios: Vec<PathBuf>,
    /// Report path (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include witness vectors and subspaces.
    #[arg(long)]
    verbose: bool,
    /// Scenarios evaluated in parallel.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut inputs = Vec::new();
    let mut unreadable = Vec::new();
    for p in &args.scenarios {
        let src = p.display().to_string();
        match std::fs::read_to_string(p) {
            Ok(text) => inputs.push((src, text)),
            Err(e) => unreadable.push((inputs.len() + unreadable.len(), src, e)),
        }
    }
    let mut report = scenario::run_batch(&inputs, args.verbose, args.jobs.max(1));
    for (pos, src, e) in unreadable {
        let r = ScenarioReport {
            source: src,
            scenario: None,
            algebra: None,
            real_basis: vec![],
            exit_code: EXIT_PARSE,
            error: Some(format!("cannot read scenario: {e}")),
            commands: vec![],
        };
        report.scenarios.insert(pos, r);
    }
    report.exit_code = scenario::combined_exit(report.scenarios.iter().map(|s| s.exit_code));
    let text = scenario::to_json(&report);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("manin: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE as u8);
            }
        }
        None => print!("{text}"),
    }
    for s in &report.scenarios {
        if let Some(e) = &s.error {
            eprintln!("manin: {}: {e}", s.source);
        }
    }
    ExitCode::from(report.exit_code as u8)
}
