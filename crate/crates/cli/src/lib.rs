//! `pbern` command line: exact p-Bernoulli tables and verification suites.
//!
//! Exit status is 0 on success, 1 when routes disagree or a verification
//! case fails, and 2 for invalid flags.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pbern::pbernoulli::{
    all_tables, check_tables, cross_validate, verify_diff_recurrence, verify_identity_binomial_harmonic,
    verify_identity_collapse, verify_identity_laurent, verify_pde,
};
use pbern::{PBernoulliTable, Rational, Route, VerificationReport};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pbern", version, about = "Exact p-Bernoulli numbers B(n, p)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the table of B(n, p) for 0 <= n <= nmax, 0 <= p <= pmax.
    Table {
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        pmax: usize,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Corrupt one entry of the theorem1 table before cross-checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Run verification suites; nmax is the t-order, pmax the largest p.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = 10)]
        pmax: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Theorem1,
    Corollary,
    Bivariate,
    All,
}

impl Method {
    fn route(self) -> Option<Route> {
        match self {
            Method::Recurrence => Some(Route::Recurrence),
            Method::Theorem1 => Some(Route::Theorem1),
            Method::Corollary => Some(Route::Corollary1),
            Method::Bivariate => Some(Route::Bivariate),
            Method::All => None,
        }
    }

    fn name(self) -> &'static str {
        self.route().map_or("all", Route::name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Pde,
    Diffrec,
    Identities,
    Cross,
    All,
}

/// Result of one invocation: the document for `--output`/stdout, text for
/// stderr, and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub document: String,
    pub diagnostics: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            document: String::new(),
            diagnostics: msg.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub nmax: usize,
    pub pmax: usize,
    pub method: String,
    pub entries: Vec<JsonEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEntry {
    pub n: usize,
    pub p: usize,
    pub num: String,
    pub den: String,
}

/// `n,p,value` with a header line, rows in `(n, p)` order.
pub fn render_csv(table: &PBernoulliTable) -> String {
    let mut out = String::from("n,p,value\n");
    for (n, p, v) in table.entries() {
        writeln!(out, "{n},{p},{v}").expect("write to String");
    }
    out
}

pub fn render_json(table: &PBernoulliTable, method: &str) -> String {
    let doc = TableDocument {
        nmax: table.nmax(),
        pmax: table.pmax(),
        method: method.to_string(),
        entries: table
            .entries()
            .map(|(n, p, v)| JsonEntry {
                n,
                p,
                num: v.numer().to_string(),
                den: v.denom().to_string(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn parse_csv(text: &str) -> Result<Vec<(usize, usize, Rational)>, String> {
    let mut lines = text.lines();
    if lines.next() != Some("n,p,value") {
        return Err("missing header".into());
    }
    lines
        .map(|line| {
            let mut parts = line.split(',');
            let (Some(n), Some(p), Some(v), None) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(format!("bad row {line:?}"));
            };
            Ok((
                n.parse().map_err(|e| format!("{e}"))?,
                p.parse().map_err(|e| format!("{e}"))?,
                v.parse().map_err(|e| format!("{e}"))?,
            ))
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Vec<(usize, usize, Rational)>, String> {
    let doc: TableDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
    doc.entries
        .into_iter()
        .map(|e| {
            let v = format!("{}/{}", e.num, e.den)
                .parse()
                .map_err(|err| format!("{err}"))?;
            Ok((e.n, e.p, v))
        })
        .collect()
}

fn render(table: &PBernoulliTable, method: Method, format: Format) -> String {
    match format {
        Format::Csv => render_csv(table),
        Format::Json => render_json(table, method.name()),
    }
}

pub fn cmd_table(nmax: usize, pmax: usize, method: Method, format: Format, inject_fault: bool) -> Outcome {
    let table = match method.route() {
        Some(route) => PBernoulliTable::compute(route, nmax, pmax),
        None => {
            let mut tables = all_tables(nmax, pmax);
            if inject_fault {
                let t = &mut tables[1];
                let bumped = t.get(nmax, pmax) + &Rational::one();
                t.set(nmax, pmax, bumped);
            }
            let report = check_tables(&tables);
            if !report.passed() {
                return Outcome {
                    code: EXIT_FAILED,
                    document: String::new(),
                    diagnostics: format!("{report}\n"),
                };
            }
            tables.swap_remove(0)
        }
    };
    Outcome {
        code: EXIT_OK,
        document: render(&table, method, format),
        diagnostics: String::new(),
    }
}

pub fn cmd_verify(suite: Suite, nmax: usize, pmax: usize) -> Outcome {
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Pde) && (nmax < 2 || pmax < 1) {
        return Outcome::usage("pde suite needs --nmax >= 2 and --pmax >= 1\n");
    }
    let mut reports: Vec<VerificationReport> = Vec::new();
    if wants(Suite::Pde) {
        reports.push(verify_pde(pmax, nmax));
    }
    if wants(Suite::Diffrec) {
        reports.extend(Route::ALL.iter().map(|&r| verify_diff_recurrence(pmax, nmax, r)));
    }
    if wants(Suite::Identities) {
        reports.push(verify_identity_binomial_harmonic(nmax));
        reports.push(verify_identity_laurent(pmax));
        reports.push(verify_identity_collapse(pmax));
    }
    if wants(Suite::Cross) {
        reports.push(cross_validate(nmax, pmax));
    }

    let mut total = VerificationReport::new("total");
    let mut document = String::new();
    for r in reports {
        writeln!(document, "{r}").expect("write to String");
        total.absorb(r);
    }
    writeln!(
        document,
        "total: {} cases, {} failures",
        total.cases_run,
        total.failures.len()
    )
    .expect("write to String");
    Outcome {
        code: if total.passed() { EXIT_OK } else { EXIT_FAILED },
        document,
        diagnostics: String::new(),
    }
}

pub fn execute(cli: Cli) -> Outcome {
    match cli.command {
        Command::Table {
            nmax,
            pmax,
            method,
            format,
            inject_fault,
            ..
        } => cmd_table(nmax, pmax, method, format, inject_fault),
        Command::Verify { suite, nmax, pmax, .. } => cmd_verify(suite, nmax, pmax),
    }
}

/// Parses arguments and runs; `--output` is left to the caller.
pub fn run<I, T>(args: I) -> (Outcome, Option<PathBuf>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let outcome = if code == EXIT_OK {
                Outcome {
                    code,
                    document: text,
                    diagnostics: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
            return (outcome, None);
        }
    };
    let output = match &cli.command {
        Command::Table { output, .. } | Command::Verify { output, .. } => output.clone(),
    };
    (execute(cli), output)
}
