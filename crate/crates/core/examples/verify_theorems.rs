//! Runs every theorem checker at its default bound and prints the reports.
//!
//! Usage: `cargo run --release --example verify_theorems -- [json|text]`

use dtdom::verify::{emit_report, run_theorem, ReportFormat, Theorem, VerifyOptions};

fn main() -> dtdom::Result<()> {
    let format = match std::env::args().nth(1).as_deref() {
        Some("json") => ReportFormat::Json,
        _ => ReportFormat::Text,
    };
    let mut failures = 0;
    for theorem in Theorem::ALL {
        let report = run_theorem(theorem, &VerifyOptions::default())?;
        failures += usize::from(!report.passed());
        print!("{}", emit_report(&report, format));
        println!();
    }
    println!("{} checkers, {failures} failed", Theorem::ALL.len());
    Ok(())
}
