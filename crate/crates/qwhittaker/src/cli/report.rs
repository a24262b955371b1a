use serde::Serialize;
use std::collections::VecDeque;
use std::fmt::{self, Display};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Mutex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSlow,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::SkippedSlow => "skipped-slow",
        })
    }
}

/// One verified statement, with both sides kept for failure reports.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
}

impl Check {
    pub fn holds(name: impl Into<String>, ok: bool) -> Check {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, expected: None, computed: None }
    }

    /// Compares two values; the rendered sides are kept either way.
    pub fn eq<T: PartialEq + Display>(name: impl Into<String>, expected: &T, computed: &T) -> Check {
        Check::with_sides(name, expected == computed, expected, computed)
    }

    pub fn with_sides(name: impl Into<String>, ok: bool, expected: impl Display, computed: impl Display) -> Check {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            expected: Some(expected.to_string()),
            computed: Some(computed.to_string()),
        }
    }

    pub fn failed(name: impl Into<String>, why: impl Display) -> Check {
        Check { name: name.into(), status: Status::Fail, expected: None, computed: Some(why.to_string()) }
    }

    pub fn skipped(name: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::SkippedSlow, expected: None, computed: None }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: u32,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<13} {}\n", c.status.to_string(), c.name));
            if c.status == Status::Fail {
                if let Some(e) = &c.expected {
                    out.push_str(&format!("    expected: {e}\n"));
                }
                if let Some(v) = &c.computed {
                    out.push_str(&format!("    computed: {v}\n"));
                }
            }
        }
        out.push_str(&format!(
            "{} (n = {}): {} passed, {} failed, {} skipped\n",
            self.suite,
            self.n,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::SkippedSlow)
        ));
        out
    }
}

pub type Job<'a> = Box<dyn FnOnce() -> Vec<Check> + Send + 'a>;

/// Runs jobs on all cores and concatenates their checks in job order.
/// A panicking job becomes a failed check.
pub fn run_jobs(jobs: Vec<(String, Job<'_>)>) -> Vec<Check> {
    let n = jobs.len();
    let queue: Mutex<VecDeque<(usize, String, Job<'_>)>> = Mutex::new(jobs.into_iter().enumerate().map(|(i, (name, j))| (i, name, j)).collect());
    let results: Mutex<Vec<Option<Vec<Check>>>> = Mutex::new((0..n).map(|_| None).collect());
    let threads = std::thread::available_parallelism().map_or(4, |p| p.get()).min(n.max(1));
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let Some((i, name, job)) = queue.lock().unwrap().pop_front() else { break };
                let out = catch_unwind(AssertUnwindSafe(job)).unwrap_or_else(|e| {
                    let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
                    vec![Check::failed(name, format!("panicked: {msg}"))]
                });
                results.lock().unwrap()[i] = Some(out);
            });
        }
    });
    results.into_inner().unwrap().into_iter().flatten().flatten().collect()
}
