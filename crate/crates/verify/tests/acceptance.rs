//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//! Pass criterion numbers as arguments to run a subset, e.g.
//! `cargo test -p qcox-verify --test acceptance -- 1 4 10`.

use std::process::ExitCode;

use qcox_verify::{run, Suite};

fn main() -> ExitCode {
    let wanted: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<u8> = if wanted.is_empty() { (1..=14).collect() } else { wanted };
    let suite = Suite::default();
    let mut failed = Vec::new();
    for id in ids {
        let Some(report) = run(id, suite) else { continue };
        println!("{report}");
        if !report.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
