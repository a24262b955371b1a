//! Runs a verification suite and a printed-table comparison through the library API.

use qwhittaker::cli::{run_suite, run_table, Status};

fn main() {
    let report = run_suite("cauchy", 4).expect("known suite");
    print!("{}", report.render());
    let table = run_table("kostka-4").expect("known table");
    println!("\n{}", table.rendered);
    println!("kostka-4 reproduced: {}", table.passed());
    println!("failed checks: {}", table.report.count(Status::Fail));
}
