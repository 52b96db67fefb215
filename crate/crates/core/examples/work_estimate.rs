// SPDX-License-Identifier: Apache-2.0

//! Enumeration work per fan-in: faulty pattern pairs (GEMFIC), the
//! `(n+1)/2` faults-per-pattern approximation for GEMNIF, and the exact
//! bit-fault count it approximates.
//!
//!     cargo run --example work_estimate

use maskmetric::metrics::{work_estimate, MetricKind};

fn main() -> maskmetric::Result<()> {
    println!(
        "{:>2} {:>14} {:>16} {:>16} {:>8}",
        "n", "pairs", "gemnif approx", "gemnif exact", "ratio"
    );
    for n in 1..=16 {
        let w = work_estimate(n, MetricKind::Gemnif)?;
        println!(
            "{n:>2} {:>14} {:>16} {:>16} {:>8.4}",
            w.faulty_pattern_pairs,
            w.gemnif_weighted_work,
            w.exact_fault_count,
            w.gemnif_weighted_work as f64 / w.exact_fault_count as f64
        );
    }
    Ok(())
}
