//! Runs every verification suite and prints its report.

use jnum::verify::{run_all, VerifyOptions};

fn main() {
    let reports = run_all(&VerifyOptions::default());
    for r in &reports {
        println!("{r}");
    }
    let failing: Vec<_> = reports.iter().filter(|r| !r.pass).map(|r| r.suite.as_str()).collect();
    println!("suites with failures: {failing:?}");
}
