// SPDX-License-Identifier: Apache-2.0

//! How much a metric drops when the fan-in of a gate grows.
//!
//! The 5-input majority gate's GEMNIF is 1/5 = 0.2, a 40% drop from the
//! 3-input gate's 1/3. Its GEMFIC, 16/31, is a 9.7% drop from 4/7.
//!
//!     cargo run --example fan_in_reduction

use maskmetric::metrics::{closed_form, percent_reduction, MetricKind};
use maskmetric::{GateFamily, GateKind};

fn main() -> maskmetric::Result<()> {
    let pairs = [
        (GateKind::And, 2, 3),
        (GateKind::And, 2, 4),
        (GateKind::Or, 2, 4),
        (GateKind::Xor, 2, 3),
        (GateKind::Majority, 3, 5),
        (GateKind::Majority, 5, 7),
        (GateKind::Minority, 3, 7),
    ];
    for (kind, from, to) in pairs {
        for metric in MetricKind::ALL {
            let a = closed_form(GateFamily::new(kind, from)?, metric)?;
            let b = closed_form(GateFamily::new(kind, to)?, metric)?;
            println!(
                "{:<9} {metric}  n={from}: {:<6} -> n={to}: {:<6}  reduction {:>6}",
                kind.name(),
                a.to_decimal(4),
                b.to_decimal(4),
                percent_reduction(a, b)?.to_string()
            );
        }
    }
    Ok(())
}
