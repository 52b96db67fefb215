// SPDX-License-Identifier: Apache-2.0

//! Closed-form metric values per gate family, oracle cross-checks, fan-in
//! comparisons and work estimates.
//!
//! Both metrics share a numerator, the number of erroneous
//! `(applied, faulty)` pattern pairs:
//!
//! | family              | output errors     |
//! |---------------------|-------------------|
//! | NOT                 | `2`               |
//! | AND, NAND, OR, NOR  | `2 (2^n - 1)`     |
//! | XOR, XNOR, MAJ, MIN | `2^(2n-1)`        |
//!
//! GEMNIF divides by the bit-fault count `2^n * sum_k C(n,k) k`, GEMFIC by
//! the faulty pattern count `2^n (2^n - 1)`. For equivalent gates GEMNIF
//! simplifies to `1/n`. In particular the 5-input majority gate has GEMNIF
//! `1/5 = 0.2`, a 40% reduction from the 3-input gate's `1/3`; a value of
//! 0.25 sometimes quoted for it does not follow from the definition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boolfn::expr::{compile_expr, BoolExpr};
use crate::boolfn::{make_gate, GateFamily, GateKind};
use crate::error::{Error, Result};
use crate::faultmodel;
use crate::ratio::{render_decimal, ExactRatio};
use crate::MAX_INPUTS;

/// Default number of decimal places when rendering metric values.
pub const DEFAULT_PRECISION: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MetricKind {
    Gemnif,
    Gemfic,
}

impl MetricKind {
    pub const ALL: [MetricKind; 2] = [MetricKind::Gemnif, MetricKind::Gemfic];

    pub fn name(self) -> &'static str {
        match self {
            MetricKind::Gemnif => "GEMNIF",
            MetricKind::Gemfic => "GEMFIC",
        }
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MetricKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "gemnif" => Ok(MetricKind::Gemnif),
            "gemfic" => Ok(MetricKind::Gemfic),
            _ => Err(format!("unknown metric `{s}`")),
        }
    }
}

fn pow2(e: usize) -> u128 {
    1u128 << e
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of erroneous ordered pattern pairs for a gate family.
pub fn output_errors(family: GateFamily) -> u128 {
    let n = family.arity();
    match family.kind() {
        GateKind::Not => 2,
        k if k.is_singleton() => 2 * (pow2(n) - 1),
        _ => pow2(2 * n - 1),
    }
}

/// Total individual input bit-faults, `2^n * sum_{k=1..n} C(n,k) k`.
pub fn fault_count(n: usize) -> u128 {
    let sum: u128 = (1..=n as u128).map(|k| binomial(n as u128, k) * k).sum();
    pow2(n) * sum
}

/// Total faulty input patterns, `2^n (2^n - 1)`.
pub fn faulty_pattern_count(n: usize) -> u128 {
    pow2(n) * (pow2(n) - 1)
}

pub fn gemnif_closed(family: GateFamily) -> Result<ExactRatio> {
    ExactRatio::new(output_errors(family), fault_count(family.arity()))
}

pub fn gemfic_closed(family: GateFamily) -> Result<ExactRatio> {
    ExactRatio::new(output_errors(family), faulty_pattern_count(family.arity()))
}

pub fn closed_form(family: GateFamily, metric: MetricKind) -> Result<ExactRatio> {
    match metric {
        MetricKind::Gemnif => gemnif_closed(family),
        MetricKind::Gemfic => gemfic_closed(family),
    }
}

/// Source of closed-form values. [`StandardClosedForm`] is the real one;
/// tests substitute others to exercise the disagreement paths.
pub trait ClosedForm {
    fn value(&self, family: GateFamily, metric: MetricKind) -> Result<ExactRatio>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct StandardClosedForm;

impl ClosedForm for StandardClosedForm {
    fn value(&self, family: GateFamily, metric: MetricKind) -> Result<ExactRatio> {
        closed_form(family, metric)
    }
}

/// What a metric is computed for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Gate(GateFamily),
    Expr(BoolExpr),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Gate(g) => write!(f, "{} n={}", g.kind(), g.arity()),
            Source::Expr(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricReport {
    pub source: Source,
    pub metric: MetricKind,
    pub closed_form: Option<ExactRatio>,
    pub oracle: ExactRatio,
    /// `closed_form == oracle`; vacuously true without a closed form.
    pub agree: bool,
    pub decimal: String,
}

pub fn report(source: &Source, metric: MetricKind) -> Result<MetricReport> {
    report_with(source, metric, &StandardClosedForm, DEFAULT_PRECISION)
}

pub fn report_with(
    source: &Source,
    metric: MetricKind,
    closed: &dyn ClosedForm,
    precision: usize,
) -> Result<MetricReport> {
    let (table, closed_form) = match source {
        Source::Gate(g) => (make_gate(*g), Some(closed.value(*g, metric)?)),
        Source::Expr(e) => (compile_expr(e)?, None),
    };
    let prof = faultmodel::profile(&table);
    let oracle = match metric {
        MetricKind::Gemnif => prof.gemnif(),
        MetricKind::Gemfic => prof.gemfic(),
    };
    Ok(MetricReport {
        source: source.clone(),
        metric,
        closed_form,
        oracle,
        agree: closed_form.is_none_or(|c| c == oracle),
        decimal: oracle.to_decimal(precision),
    })
}

/// An exact signed percentage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Percent {
    negative: bool,
    magnitude: ExactRatio,
}

impl Percent {
    pub fn is_negative(&self) -> bool {
        self.negative && !self.magnitude.is_zero()
    }

    pub fn magnitude(&self) -> ExactRatio {
        self.magnitude
    }

    pub fn render(&self, places: usize) -> String {
        format!(
            "{}%",
            render_decimal(
                self.is_negative(),
                self.magnitude.numer(),
                self.magnitude.denom(),
                places
            )
        )
    }
}

impl fmt::Display for Percent {
    /// One decimal place, e.g. `61.1%`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(1))
    }
}

/// `100 (old - new) / old`. Negative when `new > old`.
pub fn percent_reduction(old: ExactRatio, new: ExactRatio) -> Result<Percent> {
    if old.is_zero() {
        return Err(Error::ZeroBaseline);
    }
    let (hi, lo, negative) = if new <= old {
        (old, new, false)
    } else {
        (new, old, true)
    };
    let cross = |a: u128, b: u128| a.checked_mul(b).ok_or(Error::Overflow);
    let diff_num = cross(hi.numer(), lo.denom())? - cross(lo.numer(), hi.denom())?;
    let diff = ExactRatio::new(diff_num, cross(hi.denom(), lo.denom())?)?;
    let magnitude = diff
        .checked_div(old)?
        .checked_mul(ExactRatio::new(100, 1)?)?;
    Ok(Percent {
        negative,
        magnitude,
    })
}

/// Enumeration cost of the two metrics for an `n`-input function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkEstimate {
    pub n: usize,
    pub metric: MetricKind,
    /// `2^n (2^n - 1)`, the GEMFIC work.
    pub faulty_pattern_pairs: u128,
    /// `2^n (2^n - 1) (n + 1) / 2`, the usual GEMNIF approximation. Always
    /// an integer since `2^n (2^n - 1)` is even.
    pub gemnif_weighted_work: u128,
    /// `n 2^(2n-1)`, the exact bit-fault count.
    pub exact_fault_count: u128,
}

impl WorkEstimate {
    /// Work for the selected metric (the approximation for GEMNIF).
    pub fn work(&self) -> u128 {
        match self.metric {
            MetricKind::Gemfic => self.faulty_pattern_pairs,
            MetricKind::Gemnif => self.gemnif_weighted_work,
        }
    }
}

pub fn work_estimate(n: usize, metric: MetricKind) -> Result<WorkEstimate> {
    if !(1..=MAX_INPUTS).contains(&n) {
        return Err(Error::InputCount(n));
    }
    let pairs = faulty_pattern_count(n);
    Ok(WorkEstimate {
        n,
        metric,
        faulty_pattern_pairs: pairs,
        gemnif_weighted_work: pairs * (n as u128 + 1) / 2,
        exact_fault_count: n as u128 * pow2(2 * n - 1),
    })
}
