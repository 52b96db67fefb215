// SPDX-License-Identifier: Apache-2.0

//! Cross-check every gate family's closed form against the pair-enumeration
//! oracle.
//!
//!     cargo run --release --example closed_form_vs_oracle -- 10

use maskmetric::metrics::{report, MetricKind, Source};
use maskmetric::{GateFamily, GateKind};

fn main() -> maskmetric::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);

    let mut checked = 0;
    for kind in GateKind::ALL {
        for n in 1..=max_n {
            let Ok(family) = GateFamily::new(kind, n) else {
                continue;
            };
            for metric in MetricKind::ALL {
                let rep = report(&Source::Gate(family), metric)?;
                let closed = rep.closed_form.expect("gate families have closed forms");
                println!(
                    "{:<9} n={n:<2} {metric}  closed {closed:<12} oracle {:<12} {}  {}",
                    kind.name(),
                    rep.oracle,
                    rep.decimal,
                    if rep.agree { "agree" } else { "DISAGREE" }
                );
                assert!(rep.agree);
                checked += 1;
            }
        }
    }
    println!("\n{checked} cells, all agree");
    Ok(())
}
