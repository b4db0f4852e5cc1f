//! The `cayleylab` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a report
//! records a violated claim or the acceptance table has a failing row.

mod parse;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use parse::{parse_spec, parse_transposition, MAX_POINT};
pub use report::{parse_report_json, CayleyJson, CheckJson, ReportJson, Theorem1Json};

use crate::cayley::{build_cayley, CyclePath};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tgraph::TranspositionSet;
use crate::theory::{full_report, VerdictReport};
use crate::verify::run_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

/// Overrides the construction cap on `n`.
pub const MAX_N_ENV: &str = "CAYLEYLAB_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "cayleylab", version, about = "Automorphisms of Cayley graphs of S_n generated by transpositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every fact and check for one transposition set.
    Analyze(AnalyzeArgs),
    /// List the 4- or 6-cycles through e, t and k.
    Cycles(CyclesArgs),
    /// Run the acceptance table.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SpecSource {
    /// Edge list such as "1-2 2-3 3-4 4-1", or a preset: path:n, star:n, cycle:n, tree:p1,p2,...
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    pub spec: Option<String>,
    /// Read the spec from a file instead.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

impl SpecSource {
    pub fn load(&self) -> Result<TranspositionSet> {
        match (&self.spec, &self.file) {
            (Some(text), _) => parse_spec(text),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
                    position: 0,
                    message: format!("cannot read {}: {e}", path.display()),
                })?;
                parse_spec(&text)
            }
            (None, None) => Err(Error::Parse {
                position: 0,
                message: "no spec given".to_string(),
            }),
        }
    }
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: SpecSource,
    /// Emit JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Largest n for which the Cayley graph is built.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Skip the automorphism search on the whole Cayley graph.
    #[arg(long)]
    pub skip_full_aut: bool,
    /// Run per-pair checks in parallel. Output is unchanged.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Args)]
pub struct CyclesArgs {
    #[command(flatten)]
    pub source: SpecSource,
    #[arg(long = "t", value_name = "A-B")]
    pub t: String,
    #[arg(long = "k", value_name = "A-B")]
    pub k: String,
    /// Cycle length: 4, or 6 for cycles through a vertex at distance 3.
    #[arg(long = "len", default_value_t = 6)]
    pub len: usize,
    #[arg(long)]
    pub max_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Include the n = 6 tier.
    #[arg(long)]
    pub slow: bool,
}

fn limits_for(max_n: Option<usize>) -> Result<Limits> {
    let mut limits = Limits::default();
    if let Some(n) = max_n {
        limits.max_n = n;
    } else if let Ok(text) = std::env::var(MAX_N_ENV) {
        limits.max_n = text.trim().parse().map_err(|_| Error::Parse {
            position: 0,
            message: format!("{MAX_N_ENV}={text:?} is not a number"),
        })?;
    }
    Ok(limits)
}

fn optional<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "not computed".to_string(), |v| v.to_string())
}

fn write_table(out: &mut dyn Write, r: &VerdictReport, runtime_ms: u64) -> std::io::Result<()> {
    let skipped = |reason: &Option<String>, checked: usize, failures: usize| match reason {
        Some(why) => format!("skipped ({why})"),
        None => format!("{checked} pairs, {failures} failures"),
    };
    let rows = [
        ("input", r.input.to_string()),
        ("n", r.n().to_string()),
        ("girth of T(S)", r.girth.to_string()),
        ("|Aut(T(S))|", r.tgraph_aut_order.to_string()),
        ("|Aut(S_n,S)|", r.aut_sn_s_order.to_string()),
        ("Cayley vertices", r.cayley_order_v.to_string()),
        ("Cayley degree", r.cayley_degree.to_string()),
        ("bipartite", r.bipartite.to_string()),
        ("aut_order", optional(r.aut_order)),
        ("ge_order", optional(r.ge_order)),
        ("le_order", optional(r.le_order)),
        ("le_is_klein", optional(r.le_is_klein)),
        ("r_normal", optional(r.r_normal)),
        ("semidirect", optional(r.semidirect_holds)),
        ("girth >= 5 normality", format!(
            "{}{}",
            if r.theorem1_applicable { "applicable" } else { "not applicable" },
            if r.theorem1_confirmed { ", confirmed" } else { "" }
        )),
        ("4-cycle criterion", skipped(&r.lemma2_skipped, r.lemma2_pairs_checked, r.lemma2_failures.len())),
        ("6-cycle uniqueness", skipped(&r.theorem4_skipped, r.theorem4_pairs_checked, r.theorem4_failures.len())),
        ("normality condition", match &r.feng_condition.witness {
            None => "holds".to_string(),
            Some(w) => format!("fails ({w})"),
        }),
        ("runtime", format!("{runtime_ms} ms")),
    ];
    for (key, value) in rows {
        writeln!(out, "{key:<22}{value}")?;
    }
    if r.failures.is_empty() {
        writeln!(out, "{:<22}none", "failures")?;
    } else {
        writeln!(out, "failures")?;
        for f in &r.failures {
            writeln!(out, "  {f}")?;
        }
    }
    Ok(())
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32> {
    let s = args.source.load()?;
    let limits = Limits {
        skip_full_aut: args.skip_full_aut,
        parallel: args.parallel,
        ..limits_for(args.max_n)?
    };
    let start = Instant::now();
    let report = full_report(&s, &limits)?;
    let runtime_ms = start.elapsed().as_millis() as u64;
    let io = |e: std::io::Error| Error::Consistency(format!("write failed: {e}"));
    if args.json {
        let json = ReportJson::from_report(&report, runtime_ms)?;
        json.validate()?;
        writeln!(out, "{}", json.to_json()).map_err(io)?;
    } else {
        write_table(out, &report, runtime_ms).map_err(io)?;
    }
    Ok(if report.failures.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cycles(args: &CyclesArgs, out: &mut dyn Write) -> Result<i32> {
    let s = args.source.load()?;
    let t = parse_transposition(&args.t)?;
    let k = parse_transposition(&args.k)?;
    let cay = build_cayley(&s, limits_for(args.max_n)?.max_n)?;
    let found: Vec<CyclePath> = match args.len {
        4 => cay.four_cycles_through(t, k)?,
        6 => cay.six_cycles_through_with_distance3(t, k)?,
        other => {
            return Err(Error::HypothesisViolated(format!("--len must be 4 or 6, got {other}")));
        }
    };
    let io = |e: std::io::Error| Error::Consistency(format!("write failed: {e}"));
    for c in &found {
        writeln!(out, "{}", c.render(&cay)).map_err(io)?;
    }
    writeln!(out, "{} cycles", found.len()).map_err(io)?;
    Ok(EXIT_OK)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let rows = run_suite(args.slow);
    let io = |e: std::io::Error| Error::Consistency(format!("write failed: {e}"));
    for r in &rows {
        writeln!(out, "{r}").map_err(io)?;
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} rows, {} failed", rows.len(), failed).map_err(io)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_VIOLATION })
}

/// Runs a parsed command, writing results to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Cycles(c) => cycles(c, out),
        Command::VerifyPaper(v) => verify(v, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (program name first) and runs the command. Usage errors
/// exit with 1 rather than clap's default of 2, which is reserved for
/// violations.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            code
        }
    }
}
