// SPDX-License-Identifier: Apache-2.0

//! Output rows and their table/CSV/JSON renderings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfn::GateKind;
use crate::metrics::MetricKind;
use crate::ratio::{render_decimal, ExactRatio};

/// Exact CSV header of sweep output.
pub const SWEEP_HEADER: &str = "family,n,metric,numerator,denominator,value,source";

/// What a row describes: a gate kind, or an expression (`expr:<text>`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Subject {
    Gate(GateKind),
    Expr(String),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Gate(k) => f.write_str(k.name()),
            Subject::Expr(e) => write!(f, "expr:{e}"),
        }
    }
}

impl From<Subject> for String {
    fn from(s: Subject) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Subject {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        if let Some(e) = s.strip_prefix("expr:") {
            return Ok(Subject::Expr(e.to_string()));
        }
        GateKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .map(Subject::Gate)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowSource {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "both(agree)")]
    BothAgree,
    #[serde(rename = "both(DISAGREE)")]
    BothDisagree,
}

impl RowSource {
    pub fn as_str(self) -> &'static str {
        match self {
            RowSource::ClosedForm => "closed-form",
            RowSource::Oracle => "oracle",
            RowSource::BothAgree => "both(agree)",
            RowSource::BothDisagree => "both(DISAGREE)",
        }
    }
}

/// One metric value for one `(family, n, metric)` cell. On disagreement the
/// numerator and denominator hold the oracle value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: Subject,
    pub n: usize,
    pub metric: MetricKind,
    pub numerator: u64,
    pub denominator: u64,
    pub value: String,
    pub source: RowSource,
}

impl SweepRow {
    pub fn new(
        family: Subject,
        n: usize,
        metric: MetricKind,
        value: ExactRatio,
        source: RowSource,
        precision: usize,
    ) -> Self {
        Self {
            family,
            n,
            metric,
            numerator: value.numer() as u64,
            denominator: value.denom() as u64,
            value: value.to_decimal(precision),
            source,
        }
    }

    pub fn ratio(&self) -> ExactRatio {
        ExactRatio::new(self.numerator as u128, self.denominator as u128)
            .expect("row denominators are positive")
    }
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    to_csv(rows)
}

pub(crate) fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
}

pub(crate) fn to_json<T: Serialize>(rows: &[T]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

/// Parses sweep CSV back into rows. The header must match byte for byte,
/// fractions must be in lowest terms, and each `value` must be the rounded
/// rendering of its fraction at the precision it was written with.
pub fn parse_sweep_csv(text: &str) -> Result<Vec<SweepRow>, String> {
    let first = text.lines().next().unwrap_or_default();
    if first != SWEEP_HEADER {
        return Err(format!("bad header `{first}`"));
    }
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, rec) in rdr.deserialize::<SweepRow>().enumerate() {
        let row = rec.map_err(|e| format!("row {}: {e}", i + 1))?;
        if row.denominator == 0 {
            return Err(format!("row {}: zero denominator", i + 1));
        }
        let reduced = row.ratio();
        if reduced.numer() != row.numerator as u128 || reduced.denom() != row.denominator as u128 {
            return Err(format!("row {}: fraction not in lowest terms", i + 1));
        }
        let places = row.value.split_once('.').map_or(0, |(_, f)| f.len());
        let expected = render_decimal(false, reduced.numer(), reduced.denom(), places);
        if row.value != expected {
            return Err(format!(
                "row {}: value `{}` does not match {}/{} (expected `{expected}`)",
                i + 1,
                row.value,
                row.numerator,
                row.denominator
            ));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub(crate) fn sweep_table(rows: &[SweepRow]) -> String {
    let fam_w = rows
        .iter()
        .map(|r| r.family.to_string().len())
        .chain(std::iter::once(6))
        .max()
        .unwrap_or(6);
    let frac_w = rows
        .iter()
        .map(|r| r.numerator.to_string().len() + r.denominator.to_string().len() + 1)
        .chain(std::iter::once(5))
        .max()
        .unwrap_or(5);
    let val_w = rows
        .iter()
        .map(|r| r.value.len())
        .chain(std::iter::once(5))
        .max()
        .unwrap_or(5);
    let mut out = format!(
        "{:<fam_w$}  {:>2}  {:<6}  {:>frac_w$}  {:>val_w$}  source\n",
        "family", "n", "metric", "exact", "value"
    );
    for r in rows {
        let frac = format!("{}/{}", r.numerator, r.denominator);
        out.push_str(&format!(
            "{:<fam_w$}  {:>2}  {:<6}  {:>frac_w$}  {:>val_w$}  {}\n",
            r.family.to_string(),
            r.n,
            r.metric.name(),
            frac,
            r.value,
            r.source.as_str()
        ));
    }
    out
}

/// A metric at two fan-ins and the relative reduction between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareRow {
    pub family: GateKind,
    pub metric: MetricKind,
    pub n_from: usize,
    pub n_to: usize,
    pub from_numerator: u64,
    pub from_denominator: u64,
    pub from_value: String,
    pub to_numerator: u64,
    pub to_denominator: u64,
    pub to_value: String,
    pub reduction: String,
}

pub(crate) fn compare_table(rows: &[CompareRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "{} {}: n={} {}/{} = {} -> n={} {}/{} = {}, reduction {}\n",
                r.family,
                r.metric,
                r.n_from,
                r.from_numerator,
                r.from_denominator,
                r.from_value,
                r.n_to,
                r.to_numerator,
                r.to_denominator,
                r.to_value,
                r.reduction
            )
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkRow {
    pub n: usize,
    pub pairs: u64,
    pub gemnif_approx: u64,
    pub gemnif_exact: u64,
}

pub(crate) fn work_table(rows: &[WorkRow]) -> String {
    rows.iter()
        .map(|r| {
            format!(
                "n={} pairs={} gemnif_approx={} gemnif_exact={}\n",
                r.n, r.pairs, r.gemnif_approx, r.gemnif_exact
            )
        })
        .collect()
}
