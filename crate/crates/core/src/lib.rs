// SPDX-License-Identifier: Apache-2.0

//! Exact logical-masking metrics for logic gates and small Boolean functions.
//!
//! Two error metrics are computed for an `n`-input single-output function,
//! both over every ordered pair of distinct input patterns
//! `(applied, faulty)` under a uniform input distribution:
//!
//! - **GEMNIF**: output errors divided by the number of individual input
//!   bit-faults (the Hamming distance of each pair, summed).
//! - **GEMFIC**: output errors divided by the number of faulty input
//!   patterns, `2^n (2^n - 1)`.
//!
//! Every value is an exact rational. Closed forms for the nine gate families
//! live in [`metrics`]; [`faultmodel`] is the literal pair-enumeration oracle
//! that the closed forms are checked against.
//!
//! ```
//! use maskmetric::{make_gate, GateFamily, GateKind, metrics, faultmodel};
//!
//! let maj3 = GateFamily::new(GateKind::Majority, 3).unwrap();
//! let closed = metrics::gemfic_closed(maj3).unwrap();
//! let oracle = faultmodel::gemfic_oracle(&make_gate(maj3));
//! assert_eq!(closed, oracle);
//! assert_eq!(closed.to_decimal(4), "0.5714");
//! ```

pub mod boolfn;
pub mod cli;
mod error;
pub mod faultmodel;
pub mod metrics;
mod ratio;

pub use boolfn::expr::{compile_expr, parse_expr, BoolExpr, Expr};
pub use boolfn::{hamming, make_gate, on_off_sets, GateFamily, GateKind, OnOffSets, TruthTable};
pub use error::{Error, Result};
pub use faultmodel::FaultProfile;
pub use metrics::{MetricKind, MetricReport, Percent, WorkEstimate};
pub use ratio::{render_decimal, ExactRatio};

/// Largest supported input count.
pub const MAX_INPUTS: usize = 16;
