//! Recomputes each printed table and compares it entry by entry with its golden file.

use super::golden;
use super::report::{run_jobs, Check, Job, SuiteReport};
use super::CliError;
use crate::eigenops::{elliptic, science_fiction};
use crate::macdonald::{h_mu, hall_littlewood, htilde, p_mu, q_prime, QTMatrix};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::whittaker::w;

pub const TABLES: &[&str] = &[
    "W-values-5",
    "displays-31",
    "kostka-4",
    "qt-kostka-4",
    "hl-kostka-4",
    "Htilde-4",
    "Q-3",
    "qmn-3",
    "qmn-4",
    "qmn-5",
    "qmn-6",
    "C6",
    "gamma-6",
];

pub struct TableReport {
    pub report: SuiteReport,
    /// The recomputed table, one entry per line.
    pub rendered: String,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn schur_row(label: String, expected: &str, computed: SymFunc) -> Vec<Check> {
    let computed = computed.to_basis(Basis::S);
    match golden::schur(expected) {
        Ok(e) => vec![Check::with_sides(label, e.equals(&computed), e, computed)],
        Err(err) => vec![Check::failed(label, format!("golden does not parse: {err}"))],
    }
}

/// Named Schur expansions: `LABEL = expr`, computed from the label.
fn named_table(file: &str, compute: fn(&str) -> Result<SymFunc, String>) -> Result<Vec<(String, Job<'static>)>, CliError> {
    let entries = golden::named(golden::file(file).expect("embedded")).map_err(CliError::Golden)?;
    Ok(entries
        .into_iter()
        .map(|(label, expr)| {
            let job: Job = Box::new(move || match compute(&label) {
                Ok(f) => schur_row(label, &expr, f),
                Err(e) => vec![Check::failed(label, e)],
            });
            (String::new(), job)
        })
        .collect())
}

fn label_partition(label: &str, prefix: &str) -> Result<Partition, String> {
    golden::parse_label(label.strip_prefix(prefix).ok_or_else(|| format!("unexpected label {label}"))?)
}

/// Compares a matrix row by row; `name` labels each row.
fn matrix_checks(file: &str, computed: &QTMatrix, row_names: &[String]) -> Vec<Check> {
    let expected = match golden::matrix(golden::file(file).expect("embedded")) {
        Ok(m) => m,
        Err(e) => return vec![Check::failed(file, format!("golden does not parse: {e}"))],
    };
    if (expected.rows(), expected.cols()) != (computed.rows(), computed.cols()) {
        return vec![Check::failed(file, format!("shape {}x{} against {}x{}", expected.rows(), expected.cols(), computed.rows(), computed.cols()))];
    }
    (0..computed.rows())
        .map(|i| {
            let fmt_row = |r: &[crate::qt_ring::QTRational]| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" | ");
            Check::with_sides(
                format!("{file} row {}", row_names.get(i).cloned().unwrap_or_else(|| i.to_string())),
                expected.row(i) == computed.row(i),
                fmt_row(expected.row(i)),
                fmt_row(computed.row(i)),
            )
        })
        .collect()
}

fn schur_matrix(n: u32, f: impl Fn(&Partition) -> SymFunc) -> (QTMatrix, Vec<String>) {
    let parts = partitions_of(n);
    let rows = parts.iter().map(|mu| f(mu).to_vec(Basis::S, n)).collect();
    (crate::linalg::Matrix::from_rows(rows), parts.iter().map(Partition::label).collect())
}

fn compute_display(label: &str) -> Result<SymFunc, String> {
    let p31 = crate::partitions::p(&[3, 1]);
    Ok(match label {
        "HT31" => htilde(&p31),
        "H31" => h_mu(&p31),
        "P31" => p_mu(&p31),
        "HL31" => hall_littlewood(&p31),
        "QP211" => q_prime(&crate::partitions::p(&[2, 1, 1])),
        other => return Err(format!("unknown display {other}")),
    })
}

fn compute_q(label: &str) -> Result<SymFunc, String> {
    let d: Vec<u32> = label.trim_start_matches('Q').chars().filter_map(|c| c.to_digit(10)).collect();
    let [m, n] = d[..] else { return Err(format!("unexpected label {label}")) };
    elliptic::elliptic_q(m, n).map_err(|e| e.to_string())
}

fn compute_c6(label: &str) -> Result<SymFunc, String> {
    let j: u32 = label.trim_start_matches('C').parse().map_err(|_| format!("unexpected label {label}"))?;
    let b = science_fiction::science_fiction(6).map_err(|e| e.to_string())?;
    if j > b.l {
        return Err(format!("C_{j}^6 does not exist"));
    }
    Ok(b.get(j).clone())
}

/// Named-table coverage: every partition in `sizes` must appear.
fn coverage(file: &str, prefix: &str, sizes: std::ops::RangeInclusive<u32>) -> Check {
    let have: Vec<String> = golden::named(golden::file(file).expect("embedded")).unwrap_or_default().into_iter().map(|(k, _)| k).collect();
    let missing: Vec<String> = sizes.flat_map(partitions_of).map(|mu| format!("{prefix}{}", mu.label())).filter(|l| !have.contains(l)).collect();
    Check::with_sides(format!("{file} covers all partitions"), missing.is_empty(), "none missing", format!("missing {missing:?}"))
}

fn qmn_jobs(n: u32) -> Result<Vec<(String, Job<'static>)>, CliError> {
    let file = format!("qmn-{n}");
    let rows = golden::by_m(golden::file(&file).expect("embedded")).map_err(CliError::Golden)?;
    Ok(rows
        .into_iter()
        .map(|(m, expr)| {
            let name = format!("q^alpha Q_({m},{n})(q,1/q)");
            let job: Job = Box::new(move || {
                let expected = match golden::w_expansion(&expr) {
                    Ok(e) => e,
                    Err(e) => return vec![Check::failed(name, format!("golden does not parse: {e}"))],
                };
                match elliptic::qmn_specialized_direct(m, n) {
                    Ok(c) => vec![Check::eq(name, &expected, &c)],
                    Err(e) => vec![Check::failed(name, e)],
                }
            });
            (format!("qmn {m} {n}"), job)
        })
        .collect())
}

/// Recomputes table `name` and compares it with the embedded golden.
pub fn run_table(name: &str) -> Result<TableReport, CliError> {
    let mut jobs: Vec<(String, Job<'static>)> = Vec::new();
    let mut extra: Vec<Check> = Vec::new();
    match name {
        "W-values-5" => {
            jobs = named_table("w-values", |l| label_partition(l, "W").map(|mu| w(&mu)))?;
            extra.push(coverage("w-values", "W", 2..=5));
        }
        "displays-31" => jobs = named_table("displays-31", compute_display)?,
        "Htilde-4" => {
            jobs = named_table("htilde-4", |l| label_partition(l, "HT").map(|mu| htilde(&mu)))?;
            extra.push(coverage("htilde-4", "HT", 2..=4));
        }
        "Q-3" => jobs = named_table("q-mn-3", compute_q)?,
        "C6" => jobs = named_table("c6", compute_c6)?,
        "kostka-4" | "qt-kostka-4" | "hl-kostka-4" => {
            let (file, f): (&str, fn(&Partition) -> SymFunc) = match name {
                "kostka-4" => ("kostka-w-4", w),
                "qt-kostka-4" => ("qt-kostka-4", h_mu),
                _ => ("hl-kostka-4", hall_littlewood),
            };
            let job: Job = Box::new(move || {
                let (m, names) = schur_matrix(4, f);
                matrix_checks(file, &m, &names)
            });
            jobs.push((name.to_string(), job));
        }
        "gamma-6" => {
            let job: Job = Box::new(|| match science_fiction::gamma_matrix(6) {
                Ok(g) => {
                    let names: Vec<String> = (0..=3).map(|i| format!("H~_({},{i})", 6 - i)).collect();
                    let mut out = matrix_checks("gamma-6", &g, &names);
                    let (l, u) = (science_fiction::lu_lower(6), science_fiction::lu_upper(6));
                    out.extend(matrix_checks("lower-6", &l, &[]));
                    out.extend(matrix_checks("upper-6", &u, &[]));
                    out.push(Check::holds("gamma-6 = lower-6 * upper-6", g == l.mul(&u)));
                    out
                }
                Err(e) => vec![Check::failed("gamma-6", e)],
            });
            jobs.push((name.to_string(), job));
        }
        _ => match name.strip_prefix("qmn-").and_then(|n| n.parse::<u32>().ok()) {
            Some(n @ 3..=6) => jobs = qmn_jobs(n)?,
            _ => return Err(CliError::Usage(format!("unknown table {name:?}; known: {}", TABLES.join(", ")))),
        },
    }
    let mut checks = run_jobs(jobs);
    let rendered = checks
        .iter()
        .filter_map(|c| c.computed.as_ref().map(|v| if c.name.contains(" row ") { v.clone() } else { format!("{} = {v}", c.name) }))
        .collect::<Vec<_>>()
        .join("\n");
    checks.extend(extra);
    Ok(TableReport { report: SuiteReport { suite: name.to_string(), n: 0, checks }, rendered })
}
