//! Runs the verification suites with a smaller configuration than the
//! acceptance run and prints every check.

use vbs_entanglement::verify::{self, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        max_sites: 6,
        samples: 20_000,
        ..VerifyConfig::default()
    };
    for suite in verify::run_all(&cfg) {
        println!("{} {}: {}", if suite.passed() { "PASS" } else { "FAIL" }, suite.id, suite.title);
        for c in &suite.checks {
            println!("    {:<16} {}", c.status(), c.name);
        }
    }
}
