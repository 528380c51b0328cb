//! Runs every verification suite with its default bound and prints a
//! PASS/FAIL line per check.

use nakayama::verify::{run_suite, Suite};

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok());
    let mut all = true;
    for suite in Suite::ALL {
        let report = run_suite(suite, max_n);
        println!("== {} (n ≤ {})", report.suite, report.max_n);
        for check in &report.checks {
            println!("{check}");
        }
        all &= report.passed();
    }
    std::process::exit(if all { 0 } else { 1 });
}
