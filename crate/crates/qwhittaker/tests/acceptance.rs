//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use qwhittaker::cli::{run_suite, run_table, Check, Status};
use std::time::{Duration, Instant};

struct Outcome {
    checks: Vec<Check>,
    elapsed: Duration,
    budget: Option<Duration>,
}

fn suite(name: &str, n: u32) -> Vec<Check> {
    let r = run_suite(name, n).unwrap_or_else(|e| panic!("{name}: {e}"));
    r.checks.into_iter().map(|mut c| {
        c.name = format!("{name} {n}: {}", c.name);
        c
    }).collect()
}

fn table(name: &str) -> Vec<Check> {
    let t = run_table(name).unwrap_or_else(|e| panic!("{name}: {e}"));
    t.report.checks.into_iter().map(|mut c| {
        c.name = format!("table {name}: {}", c.name);
        c
    }).collect()
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> Vec<Check>) -> Outcome {
    let t = Instant::now();
    let checks = f();
    Outcome { checks, elapsed: t.elapsed(), budget }
}

fn criterion_1() -> Vec<Check> {
    ["W-values-5", "displays-31", "kostka-4", "qt-kostka-4", "hl-kostka-4", "Htilde-4", "Q-3", "qmn-3", "qmn-4", "qmn-5", "qmn-6"].iter().flat_map(|t| table(t)).collect()
}

fn criterion_2() -> Vec<Check> {
    let mut v = suite("duality", 6);
    v.extend(suite("cauchy", 5));
    v
}

fn criterion_6() -> Vec<Check> {
    // The printed q^alpha Q_mn tables belong to criterion 1.
    let mut v: Vec<Check> = suite("qmn-tables", 6).into_iter().filter(|c| !c.name.contains(": table ")).collect();
    for (s, n) in [("delta-zero", 6), ("delta-bar", 5), ("qt-two-rows", 6), ("vn", 6)] {
        v.extend(suite(s, n));
    }
    v
}

fn criterion_8() -> Vec<Check> {
    let mut v = suite("gh-nfact", 4);
    v.extend(suite("gh-pieri", 5));
    v
}

fn main() {
    let criteria: Vec<(u32, &str, Box<dyn FnOnce() -> Outcome>)> = vec![
        (1, "printed tables and displays", Box::new(|| timed(Some(Duration::from_secs(120)), criterion_1))),
        (2, "duality and Cauchy identity", Box::new(|| timed(None, criterion_2))),
        (3, "Pieri rules", Box::new(|| timed(None, || suite("pieri", 7)))),
        (4, "down/up operators", Box::new(|| timed(None, || suite("downup", 6)))),
        (5, "Macdonald characterisations", Box::new(|| timed(None, || suite("mac-tables", 6)))),
        (6, "Q_mn, Delta0, Delta-bar, nabla and V_n", Box::new(|| timed(None, criterion_6))),
        (7, "two-row C_j^n functions", Box::new(|| timed(None, || suite("science-fiction", 8)))),
        (8, "Garsia-Haiman modules", Box::new(|| timed(Some(Duration::from_secs(600)), criterion_8))),
    ];
    let mut all_ok = true;
    let mut details = Vec::new();
    for (k, what, run) in criteria {
        let o = run();
        let failed: Vec<&Check> = o.checks.iter().filter(|c| c.status == Status::Fail).collect();
        let passed = o.checks.iter().filter(|c| c.status == Status::Pass).count();
        let over = o.budget.is_some_and(|b| o.elapsed > b);
        let ok = failed.is_empty() && !over && passed > 0;
        all_ok &= ok;
        println!(
            "criterion {k}: {} ({what}; {passed} checks passed, {} failed, {:.1}s{})",
            if ok { "PASS" } else { "FAIL" },
            failed.len(),
            o.elapsed.as_secs_f64(),
            if over { ", over budget" } else { "" }
        );
        for c in failed {
            details.push(format!("  [{k}] {}\n      expected: {}\n      computed: {}", c.name, c.expected.as_deref().unwrap_or("-"), c.computed.as_deref().unwrap_or("-")));
        }
    }
    if !details.is_empty() {
        println!("failures:");
        for d in details {
            println!("{d}");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
