//! Command-line front-end: expansions, verification suites and table reproduction.
//!
//! Exit codes: 0 when everything passed, 1 on a verification failure, 2 on a usage error.

pub mod golden;
pub mod report;
pub mod suites;
pub mod tables;

pub use report::{Check, Status, SuiteReport};
pub use suites::{run_suite, SUITES};
pub use tables::{run_table, TableReport, TABLES};

use crate::eigenops::{self, elliptic, science_fiction};
use crate::ghmodules;
use crate::macdonald::{h_mu, hall_littlewood, htilde, p_mu};
use crate::partitions::{Diagram, Partition};
use crate::pieri::{self, DualPieriMode};
use crate::symfunc::{parse_symfunc, Basis, SymFunc};
use crate::whittaker::{self, expand_in_w, w, w_hat, WExpansion, WKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("golden file: {0}")]
    Golden(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qwh", about = "Exact q-Whittaker and Macdonald computations")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a symmetric function in a chosen basis.
    Expand(ExpandArgs),
    /// Run a verification suite up to size `n`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
    /// Recompute a printed table and compare it with its golden copy.
    Table { name: String },
    /// List suites and tables.
    List,
    /// Data attached to one `W_mu`.
    Whittaker {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// Pieri rules on the W basis.
    Pieri {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// `W^_k W_mu` instead of `h_k^perp W_mu`.
        #[arg(long)]
        dual: bool,
    },
    /// Derivative-closure module of a diagram.
    Gh {
        /// Cells as JSON, e.g. `[[0,0],[1,0],[0,1]]`.
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = GhReport::Hilbert)]
        report: GhReport,
        /// Close under x-derivatives only.
        #[arg(long)]
        whittaker: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GhReport {
    Hilbert,
    Frobenius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    W,
    What,
    Htilde,
    H,
    #[value(name = "HL")]
    Hl,
    P,
    Qmn,
    C,
    Nabla,
    Delta,
    DeltaPrime,
    Delta0,
    DeltaBar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutBasis {
    S,
    M,
    E,
    H,
    P,
    W,
    What,
}

#[derive(Debug, clap::Args)]
pub struct ExpandArgs {
    #[arg(value_enum, ignore_case = true)]
    pub object: Object,
    /// Partition, e.g. `3,1`.
    #[arg(long, value_parser = parse_partition)]
    pub mu: Option<Partition>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Index `j` of `C_j^n`.
    #[arg(long)]
    pub j: Option<u32>,
    /// Operator symbol for Delta-type objects, e.g. `e2`.
    #[arg(long)]
    pub f: Option<String>,
    /// Argument of an operator, e.g. `s21` or `W21`.
    #[arg(long)]
    pub g: Option<String>,
    /// Specialise `q^alpha Q_mn` at `t = 1/q`.
    #[arg(long)]
    pub specialized: bool,
    #[arg(long, value_enum, default_value_t = OutBasis::S, ignore_case = true)]
    pub basis: OutBasis,
}

/// `3,1` or `31`.
pub fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    let parts: Result<Vec<u32>, _> = if s.contains(',') {
        s.split(',').map(|x| x.trim().parse::<u32>()).collect()
    } else {
        s.chars().map(|c| c.to_string().parse::<u32>()).collect()
    };
    let parts = parts.map_err(|e| format!("bad partition {s:?}: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// `W21 + q*W3` style input, or any single-basis expression.
fn parse_input(s: &str) -> Result<SymFunc, CliError> {
    let bad = |e: String| CliError::Usage(format!("cannot parse {s:?}: {e}"));
    if s.contains("What") {
        let e = golden::w_expansion(&s.replace("What", "W")).map_err(bad)?;
        Ok(whittaker::from_w(&WExpansion { name: "What".into(), terms: e.terms }, WKind::WHat))
    } else if s.contains('W') {
        Ok(whittaker::from_w(&golden::w_expansion(s).map_err(bad)?, WKind::W))
    } else {
        parse_symfunc(s).map_err(bad)
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

/// The requested object as a symmetric function, with a display name.
pub fn expand_object(a: &ExpandArgs) -> Result<(String, SymFunc), CliError> {
    let mu = || need(a.mu.clone(), "mu");
    let op_arg = || parse_input(&need(a.g.clone(), "g")?);
    let op_f = || parse_input(&need(a.f.clone(), "f")?);
    Ok(match a.object {
        Object::W => (format!("W{}", mu()?.label()), w(&mu()?)),
        Object::What => (format!("What{}", mu()?.label()), w_hat(&mu()?)),
        Object::Htilde => (format!("Htilde{}", mu()?.label()), htilde(&mu()?)),
        Object::H => (format!("H{}", mu()?.label()), h_mu(&mu()?)),
        Object::Hl => (format!("HL{}", mu()?.label()), hall_littlewood(&mu()?)),
        Object::P => (format!("P{}", mu()?.label()), p_mu(&mu()?)),
        Object::Qmn => {
            let (m, n) = (need(a.m, "m")?, need(a.n, "n")?);
            let q = elliptic::elliptic_q(m, n).map_err(|e| CliError::Usage(e.to_string()))?;
            if a.specialized {
                let s = q.specialize(&crate::qt_ring::Subst::TInvQ).map_err(|e| CliError::Compute(e.to_string()))?;
                (format!("q^{} Q_({m},{n})(q,1/q)", elliptic::alpha(m, n)), s.map_coeffs(|c| c.mul_monomial(elliptic::alpha(m, n), 0)))
            } else {
                (format!("Q_({m},{n})"), q)
            }
        }
        Object::C => {
            let (n, j) = (need(a.n, "n")?, need(a.j, "j")?);
            let b = science_fiction::science_fiction(n).map_err(|e| CliError::Usage(e.to_string()))?;
            if j > b.l {
                return Err(CliError::Usage(format!("C_j^{n} needs j <= {}", b.l)));
            }
            (format!("C_{j}^{n}"), b.get(j).clone())
        }
        Object::Nabla => ("nabla(g)".into(), eigenops::nabla(&op_arg()?)),
        Object::Delta => ("Delta_f(g)".into(), eigenops::delta(&op_f()?, &op_arg()?)),
        Object::DeltaPrime => ("Delta'_f(g)".into(), eigenops::delta_prime(&op_f()?, &op_arg()?)),
        Object::Delta0 => ("Delta0_f(g)".into(), eigenops::delta_zero(&op_f()?, &op_arg()?)),
        Object::DeltaBar => ("Delta-bar_f(g)".into(), eigenops::delta_bar(&op_f()?, &op_arg()?)),
    })
}

fn terms_json<'a>(it: impl Iterator<Item = (&'a Partition, &'a crate::qt_ring::QTRational)>) -> serde_json::Value {
    it.map(|(p, c)| json!({ "mu": p.parts(), "c": c.to_string() })).collect()
}

/// Text and JSON renderings of `f` in the requested basis.
pub fn render(name: &str, f: &SymFunc, basis: OutBasis) -> (String, serde_json::Value) {
    let (letter, text, terms) = match basis {
        OutBasis::W | OutBasis::What => {
            let kind = if basis == OutBasis::W { WKind::W } else { WKind::WHat };
            let e = expand_in_w(f, kind);
            (e.name.clone(), e.to_string(), terms_json(e.terms.iter()))
        }
        _ => {
            let b = match basis {
                OutBasis::M => Basis::M,
                OutBasis::E => Basis::E,
                OutBasis::H => Basis::H,
                OutBasis::P => Basis::P,
                _ => Basis::S,
            };
            let g = f.to_basis(b);
            (b.letter().to_string(), g.to_string(), terms_json(g.terms().iter()))
        }
    };
    (format!("{name} = {text}"), json!({ "name": name, "basis": letter, "terms": terms }))
}

fn emit(out: &mut dyn Write, json: bool, text: &str, value: serde_json::Value) {
    // Broken pipes are not worth a panic.
    let _ = if json { writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serialisable")) } else { writeln!(out, "{text}") };
}

fn run_command(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Expand(a) => {
            let (name, f) = expand_object(a)?;
            let (text, value) = render(&name, &f, a.basis);
            emit(out, cli.json, &text, value);
            Ok(0)
        }
        Command::Verify { suite, n } => {
            let r = run_suite(suite, *n)?;
            emit(out, cli.json, r.render().trim_end(), serde_json::to_value(&r).expect("serialisable"));
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Table { name } => {
            let t = run_table(name)?;
            let mut text = t.rendered.clone();
            for c in t.report.failures() {
                text.push_str(&format!("\nMISMATCH {}\n    golden:   {}\n    computed: {}", c.name, c.expected.as_deref().unwrap_or("-"), c.computed.as_deref().unwrap_or("-")));
            }
            text.push_str(&format!("\n{}: {}", name, if t.passed() { "matches golden" } else { "DIFFERS from golden" }));
            emit(out, cli.json, &text, json!({ "table": name, "rendered": t.rendered, "report": t.report }));
            Ok(if t.passed() { 0 } else { 1 })
        }
        Command::List => {
            let text = format!("suites: {}\ntables: {}", SUITES.join(", "), TABLES.join(", "));
            emit(out, cli.json, &text, json!({ "suites": SUITES, "tables": TABLES }));
            Ok(0)
        }
        Command::Whittaker { mu } => {
            let lines = [
                render(&format!("W{}", mu.label()), &w(mu), OutBasis::S).0,
                render(&format!("What{}", mu.label()), &w_hat(mu), OutBasis::S).0,
                format!("v_mu = {}", whittaker::v_mu(mu)),
                format!("Hilbert series = {}", whittaker::hilbert(mu)),
            ];
            let value = json!({
                "mu": mu.parts(),
                "W": render("W", &w(mu), OutBasis::S).1,
                "What": render("What", &w_hat(mu), OutBasis::S).1,
                "v_mu": whittaker::v_mu(mu).to_string(),
                "hilbert": whittaker::hilbert(mu).to_string(),
            });
            emit(out, cli.json, &lines.join("\n"), value);
            Ok(0)
        }
        Command::Pieri { mu, k, dual } => {
            let (name, e) = if *dual {
                (format!("What{k} * W{}", mu.label()), pieri::dual_pieri(*k, mu, DualPieriMode::HatW))
            } else {
                (format!("h{k}^perp W{}", mu.label()), pieri::hk_perp_w(mu, *k))
            };
            emit(out, cli.json, &format!("{name} = {e}"), json!({ "name": name, "basis": e.name, "terms": terms_json(e.terms.iter()) }));
            Ok(0)
        }
        Command::Gh { diagram, report, whittaker: x_only } => {
            let cells: Vec<(u32, u32)> =
                serde_json::from_str::<Vec<[u32; 2]>>(diagram).map_err(|e| CliError::Usage(format!("bad --diagram: {e}")))?.into_iter().map(|[a, b]| (a, b)).collect();
            let d = Diagram::new(cells.iter().copied());
            if d.len() != cells.len() {
                return Err(CliError::Usage("repeated cells in --diagram".into()));
            }
            let m = if *x_only { ghmodules::whittaker_module(&d) } else { ghmodules::derivative_closure(&d) }.map_err(|e| CliError::Usage(e.to_string()))?;
            match report {
                GhReport::Hilbert => {
                    let h = m.hilbert();
                    let text = h.iter().map(|((a, b), k)| format!("{k}*q^{a}t^{b}")).collect::<Vec<_>>().join(" + ");
                    let value = json!({ "dim": m.dim(), "hilbert": h.iter().map(|((a, b), k)| json!({ "q": a, "t": b, "dim": k })).collect::<Vec<_>>() });
                    emit(out, cli.json, &format!("dim = {}\nHilbert series = {text}", m.dim()), value);
                }
                GhReport::Frobenius => {
                    let f = if *x_only { ghmodules::graded_frobenius_x(&m) } else { ghmodules::bigraded_frobenius(&m) };
                    let (text, value) = render("Frobenius", &f, OutBasis::S);
                    emit(out, cli.json, &text, value);
                }
            }
            Ok(0)
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run_command(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
