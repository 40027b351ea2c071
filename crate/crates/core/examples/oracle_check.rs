//! Runs every verification suite up to n = 6 and prints a summary.

use sepprob::verify::{run, Suite, VerifyOptions};
use sepprob::Oracle;

fn main() -> sepprob::Result<()> {
    let opts = VerifyOptions {
        max_n: 6,
        suite: Suite::All,
        inject_fault: false,
    };
    let report = run(Oracle::global(), &opts)?;
    for c in report.mismatches() {
        println!("FAIL {}: {} vs {}", c.label, c.formula, c.oracle);
    }
    println!("{} checks, {} mismatches", report.checks.len(), report.mismatches().count());
    Ok(())
}
