//! JSON scenario runner behind the `manin` binary.
//!
//! A scenario names an algebra, a Manin form, subjects (subspaces, Lagrangian
//! data, triples, links, involutions) and a list of commands. Reports are
//! deterministic: no timings, stable ordering, exact rationals as `[num, den]`.

pub mod model;
pub mod run;

use rayon::prelude::*;
use serde::Serialize;

pub use model::{parse, Scenario};
pub use run::{run_scenario, run_text, CommandReport, ScenarioReport, Status};
pub use run::{EXIT_FAIL, EXIT_INVALID, EXIT_PARSE, EXIT_PASS};

pub const FORMAT: &str = "manin-report/1";

pub const BASIS_CONVENTION: &str = "complex basis e_1..e_n is realified as (e_1, i*e_1, e_2, i*e_2, ...); \
    each simple ideal sl_m lists H_k = E_kk - E_(k+1)(k+1) for k = 1..m-1, then E_ab for a < b, \
    then E_ba for a < b, both in row-major order of (a, b); center basis vectors come last; \
    each scenario report lists its real basis labels";

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format: &'static str,
    pub basis_convention: &'static str,
    pub exit_code: i32,
    pub scenarios: Vec<ScenarioReport>,
}

/// Worst exit code: parse (2) and validation (3) errors outrank command failures (1).
pub fn combined_exit(codes: impl IntoIterator<Item = i32>) -> i32 {
    codes.into_iter().max().unwrap_or(EXIT_PASS)
}

/// Runs `(source, text)` inputs, in parallel when `jobs > 1`, keeping input order.
pub fn run_batch(inputs: &[(String, String)], verbose: bool, jobs: usize) -> Report {
    let one = |(src, text): &(String, String)| run_text(text, src, verbose);
    let scenarios: Vec<ScenarioReport> = if jobs > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| inputs.par_iter().map(one).collect()),
            Err(_) => inputs.iter().map(one).collect(),
        }
    } else {
        inputs.iter().map(one).collect()
    };
    Report {
        format: FORMAT,
        basis_convention: BASIS_CONVENTION,
        exit_code: combined_exit(scenarios.iter().map(|s| s.exit_code)),
        scenarios,
    }
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
