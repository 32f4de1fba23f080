//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Sub-checks against published forms that are known to be wrong print
//! `FAIL [expected]` and do not affect the exit status.

use std::process::ExitCode;
use std::time::Instant;

use vbs_entanglement::verify::{self, VerifyConfig};

fn main() -> ExitCode {
    let start = Instant::now();
    let cfg = VerifyConfig::default();
    let suites = verify::run_all(&cfg);
    let mut failed = 0;
    for suite in &suites {
        let status = if suite.passed() { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2}: {}", suite.id, suite.title);
        for c in &suite.checks {
            println!(
                "    {:<15} {}: observed {:.6e}, expected {:.6e}, tol {:.1e}",
                c.status(),
                c.name,
                c.observed,
                c.expected,
                c.tol
            );
        }
        if !suite.passed() {
            failed += 1;
        }
    }
    let expected: usize = suites.iter().map(|s| s.known_failures().count()).sum();
    println!(
        "{} of {} criteria passed, {expected} expected sub-check failures, {:.1}s",
        suites.len() - failed,
        suites.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
