// SPDX-License-Identifier: Apache-2.0

//! Command-line front end: `analyze`, `sweep`, `compare` and `work`.
//!
//! Exit codes: 0 on success, 2 for usage and domain errors (bad flags,
//! illegal arity, out-of-range `n`, unwritable `--out`), 3 when a closed form
//! and the oracle disagree. A disagreement is a bug, never a valid result.

pub mod rows;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::boolfn::expr::parse_expr;
use crate::boolfn::{make_gate, GateFamily, GateKind};
use crate::error::Error;
use crate::faultmodel;
use crate::metrics::{
    percent_reduction, report_with, work_estimate, ClosedForm, MetricKind, Source,
    StandardClosedForm, DEFAULT_PRECISION,
};
use crate::ratio::ExactRatio;
use crate::MAX_INPUTS;

use rows::{CompareRow, RowSource, Subject, SweepRow, WorkRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "maskmetric",
    version,
    about = "Exact logical-masking metrics (GEMNIF, GEMFIC) for logic gates"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Decimal places for rendered values.
    #[arg(long, default_value_t = DEFAULT_PRECISION, global = true, value_parser = parse_precision)]
    pub precision: usize,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metric values for one gate or one expression.
    Analyze(AnalyzeArgs),
    /// Metric values for gate families over a range of fan-ins.
    Sweep(SweepArgs),
    /// Relative reduction of a metric between two fan-ins.
    Compare(CompareArgs),
    /// Enumeration work for the two metrics.
    Work(WorkArgs),
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("subject").required(true).args(["gate", "expr"])))]
pub struct AnalyzeArgs {
    /// not|and|nand|or|nor|xor|xnor|maj|min
    #[arg(long, value_parser = GateKind::from_str)]
    pub gate: Option<GateKind>,
    /// Fan-in (defaults to 1 for NOT).
    #[arg(long, requires = "gate")]
    pub n: Option<usize>,
    /// Boolean expression, e.g. "A&B | B&C | A&C" or "MAJ(a,b,c)".
    #[arg(long)]
    pub expr: Option<String>,
    #[arg(long, value_enum, default_value_t = MetricSel::Both)]
    pub metric: MetricSel,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated gate names, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_families)]
    pub families: FamilyList,
    /// Fan-in or inclusive range `lo..hi`.
    #[arg(long)]
    pub n: NRange,
    #[arg(long, value_enum, default_value_t = MetricSel::Both)]
    pub metric: MetricSel,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_parser = GateKind::from_str)]
    pub gate: GateKind,
    /// The two fan-ins to compare: `--n <from> <to>`.
    #[arg(long, num_args = 2, required = true)]
    pub n: Vec<usize>,
    #[arg(long, value_enum, default_value_t = MetricSel::Both)]
    pub metric: MetricSel,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct WorkArgs {
    /// Fan-in or inclusive range `lo..hi`.
    #[arg(long)]
    pub n: NRange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricSel {
    Gemnif,
    Gemfic,
    Both,
}

impl MetricSel {
    pub fn kinds(self) -> &'static [MetricKind] {
        match self {
            MetricSel::Gemnif => &[MetricKind::Gemnif],
            MetricSel::Gemfic => &[MetricKind::Gemfic],
            MetricSel::Both => &MetricKind::ALL,
        }
    }
}

/// Inclusive fan-in range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid fan-in `{t}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        if lo < 1 || hi > MAX_INPUTS {
            return Err(format!("fan-in range `{s}` outside 1..{MAX_INPUTS}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

fn parse_precision(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(p) if p <= 18 => Ok(p),
        _ => Err(format!("precision `{s}` must be an integer in 0..=18")),
    }
}

/// Gate kinds in sweep order, deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyList(pub Vec<GateKind>);

fn parse_families(s: &str) -> Result<FamilyList, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(FamilyList(GateKind::ALL.to_vec()));
    }
    let mut kinds = s
        .split(',')
        .map(|t| GateKind::from_str(t.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    kinds.sort();
    kinds.dedup();
    Ok(FamilyList(kinds))
}

enum Failure {
    Usage(String),
    Disagree(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Output text plus an exit code; rows are still printed on disagreement.
struct Outcome {
    text: String,
    disagreement: Option<String>,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &StandardClosedForm, stdout, stderr)
}

/// [`run`] with a caller-supplied closed-form source.
pub fn run_with<I, T>(
    args: I,
    closed: &dyn ClosedForm,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    execute(&config, closed, stdout, stderr)
}

pub fn execute(
    config: &RunConfig,
    closed: &dyn ClosedForm,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let result = match &config.command {
        Command::Analyze(a) => analyze(config, a, closed),
        Command::Sweep(a) => sweep(config, a, closed, stderr),
        Command::Compare(a) => compare(config, a, closed),
        Command::Work(a) => work(config, a),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Disagree(msg)) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            return EXIT_DISAGREE;
        }
    };
    let written = match &config.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match outcome.disagreement {
        Some(msg) => {
            let _ = writeln!(stderr, "internal error: {msg}");
            EXIT_DISAGREE
        }
        None => EXIT_OK,
    }
}

/// Computes one cell according to `method`. `oracle` is evaluated lazily and
/// shared between metrics of the same family and fan-in.
fn cell(
    family: GateFamily,
    metric: MetricKind,
    method: Method,
    closed: &dyn ClosedForm,
    oracle: &mut Option<faultmodel::FaultProfile>,
) -> Result<(ExactRatio, RowSource), Failure> {
    let mut oracle_value = || {
        let prof = oracle.get_or_insert_with(|| faultmodel::profile(&make_gate(family)));
        match metric {
            MetricKind::Gemnif => prof.gemnif(),
            MetricKind::Gemfic => prof.gemfic(),
        }
    };
    Ok(match method {
        Method::Closed => (closed.value(family, metric)?, RowSource::ClosedForm),
        Method::Oracle => (oracle_value(), RowSource::Oracle),
        Method::Both => {
            let c = closed.value(family, metric)?;
            let o = oracle_value();
            let src = if c == o {
                RowSource::BothAgree
            } else {
                RowSource::BothDisagree
            };
            (o, src)
        }
    })
}

fn disagreement_note(rows: &[SweepRow]) -> Option<String> {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.source == RowSource::BothDisagree)
        .map(|r| format!("{} n={} {}", r.family, r.n, r.metric))
        .collect();
    (!bad.is_empty()).then(|| format!("closed form disagrees with oracle for {}", bad.join(", ")))
}

fn render_rows(config: &RunConfig, rows: &[SweepRow]) -> String {
    match config.format {
        Format::Table => rows::sweep_table(rows),
        Format::Csv => rows::sweep_csv(rows),
        Format::Json => rows::to_json(rows),
    }
}

fn analyze(
    config: &RunConfig,
    args: &AnalyzeArgs,
    closed: &dyn ClosedForm,
) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    let mut lines = String::new();
    if let Some(kind) = args.gate {
        let n = match (args.n, kind) {
            (Some(n), _) => n,
            (None, GateKind::Not) => 1,
            (None, _) => return Err(Failure::Usage(format!("--n is required for {kind}"))),
        };
        let family = GateFamily::new(kind, n)?;
        let mut oracle = None;
        for &metric in args.metric.kinds() {
            let (value, source) = match args.method {
                Method::Both => {
                    let rep = report_with(&Source::Gate(family), metric, closed, config.precision)?;
                    let c = rep.closed_form.expect("gates have closed forms");
                    if rep.agree {
                        (rep.oracle, RowSource::BothAgree)
                    } else {
                        lines.push_str(&format!(
                            "{kind} n={n} {metric}: closed {c} != oracle {} (DISAGREE)\n",
                            rep.oracle
                        ));
                        rows.push(SweepRow::new(
                            Subject::Gate(kind),
                            n,
                            metric,
                            rep.oracle,
                            RowSource::BothDisagree,
                            config.precision,
                        ));
                        continue;
                    }
                }
                m => cell(family, metric, m, closed, &mut oracle)?,
            };
            let tag = if source == RowSource::BothAgree {
                " (agree)"
            } else {
                ""
            };
            lines.push_str(&format!(
                "{kind} n={n} {metric}: {value} = {}{tag}\n",
                value.to_decimal(config.precision)
            ));
            rows.push(SweepRow::new(
                Subject::Gate(kind),
                n,
                metric,
                value,
                source,
                config.precision,
            ));
        }
    } else {
        let text = args.expr.as_deref().expect("clap enforces gate or expr");
        if args.method == Method::Closed {
            return Err(Failure::Usage(
                "no closed form exists for an expression; use --method oracle".into(),
            ));
        }
        let expr = parse_expr(text)?;
        let src = Source::Expr(expr);
        for &metric in args.metric.kinds() {
            let rep = report_with(&src, metric, closed, config.precision)?;
            let Source::Expr(e) = &src else {
                unreachable!()
            };
            lines.push_str(&format!(
                "expr {:?} [{}] {metric}: {} = {}\n",
                text,
                e.vars().join(", "),
                rep.oracle,
                rep.decimal
            ));
            rows.push(SweepRow::new(
                Subject::Expr(text.to_string()),
                e.vars().len(),
                metric,
                rep.oracle,
                RowSource::Oracle,
                config.precision,
            ));
        }
    }
    let disagreement = disagreement_note(&rows);
    let text = match config.format {
        Format::Table => lines,
        _ => render_rows(config, &rows),
    };
    Ok(Outcome { text, disagreement })
}

fn sweep(
    config: &RunConfig,
    args: &SweepArgs,
    closed: &dyn ClosedForm,
    stderr: &mut dyn Write,
) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    for &kind in &args.families.0 {
        for n in args.n.iter() {
            let family = match GateFamily::new(kind, n) {
                Ok(f) => f,
                Err(e) => {
                    let _ = writeln!(stderr, "note: skipping {kind} n={n}: {e}");
                    continue;
                }
            };
            let mut oracle = None;
            for &metric in args.metric.kinds() {
                let (value, source) = cell(family, metric, args.method, closed, &mut oracle)?;
                rows.push(SweepRow::new(
                    Subject::Gate(kind),
                    n,
                    metric,
                    value,
                    source,
                    config.precision,
                ));
            }
        }
    }
    if rows.is_empty() {
        return Err(Failure::Usage(format!(
            "no legal (family, n) points in range {}",
            args.n
        )));
    }
    Ok(Outcome {
        text: render_rows(config, &rows),
        disagreement: disagreement_note(&rows),
    })
}

fn compare(
    config: &RunConfig,
    args: &CompareArgs,
    closed: &dyn ClosedForm,
) -> Result<Outcome, Failure> {
    let (n_from, n_to) = (args.n[0], args.n[1]);
    let from = GateFamily::new(args.gate, n_from)?;
    let to = GateFamily::new(args.gate, n_to)?;
    let (mut oracle_from, mut oracle_to) = (None, None);
    let mut rows = Vec::new();
    for &metric in args.metric.kinds() {
        let (a, src_a) = cell(from, metric, args.method, closed, &mut oracle_from)?;
        let (b, src_b) = cell(to, metric, args.method, closed, &mut oracle_to)?;
        for (src, n) in [(src_a, n_from), (src_b, n_to)] {
            if src == RowSource::BothDisagree {
                return Err(Failure::Disagree(format!(
                    "closed form disagrees with oracle for {} n={n} {metric}",
                    args.gate
                )));
            }
        }
        let reduction = percent_reduction(a, b)?;
        rows.push(CompareRow {
            family: args.gate,
            metric,
            n_from,
            n_to,
            from_numerator: a.numer() as u64,
            from_denominator: a.denom() as u64,
            from_value: a.to_decimal(config.precision),
            to_numerator: b.numer() as u64,
            to_denominator: b.denom() as u64,
            to_value: b.to_decimal(config.precision),
            reduction: reduction.to_string(),
        });
    }
    let text = match config.format {
        Format::Table => rows::compare_table(&rows),
        Format::Csv => rows::to_csv(&rows),
        Format::Json => rows::to_json(&rows),
    };
    Ok(Outcome {
        text,
        disagreement: None,
    })
}

fn work(config: &RunConfig, args: &WorkArgs) -> Result<Outcome, Failure> {
    let rows = args
        .n
        .iter()
        .map(|n| {
            let w = work_estimate(n, MetricKind::Gemnif)?;
            Ok(WorkRow {
                n,
                pairs: w.faulty_pattern_pairs as u64,
                gemnif_approx: w.gemnif_weighted_work as u64,
                gemnif_exact: w.exact_fault_count as u64,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = match config.format {
        Format::Table => rows::work_table(&rows),
        Format::Csv => rows::to_csv(&rows),
        Format::Json => rows::to_json(&rows),
    };
    Ok(Outcome {
        text,
        disagreement: None,
    })
}
