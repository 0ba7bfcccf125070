//! Runs every verification check and prints the JSON report.

use wickstar::verify::{run_suites, Mode, SuiteOptions};

fn main() -> wickstar::Result<()> {
    let mode = match std::env::args().nth(1).as_deref() {
        Some("float") => Mode::Float,
        _ => Mode::Exact,
    };
    let report = run_suites(&SuiteOptions {
        seed: 7,
        mode,
        timings: true,
        ..Default::default()
    })?;
    println!("{}", report.to_json());
    for c in &report.checks {
        eprintln!("{:<28} {:?} {:.3e}", c.name, c.status, c.max_residual);
    }
    Ok(())
}
