// SPDX-License-Identifier: Apache-2.0

//! Truth tables of the nine gate families, their ON/OFF sets, and the
//! complement relations between them.
//!
//!     cargo run --example gate_truth_tables

use maskmetric::{make_gate, on_off_sets, GateFamily, GateKind};

fn main() -> maskmetric::Result<()> {
    let maj = make_gate(GateFamily::new(GateKind::Majority, 3)?);
    let min = make_gate(GateFamily::new(GateKind::Minority, 3)?);

    println!(" C B A | MAJ MIN");
    for p in 0..maj.size() {
        println!(
            " {} {} {} |  {}   {}",
            (p >> 2) & 1,
            (p >> 1) & 1,
            p & 1,
            maj.output(p) as u8,
            min.output(p) as u8
        );
    }
    assert_eq!(min, maj.complement());

    println!();
    println!(
        "{:<9} {:>2}  {:>5} {:>5}  table",
        "family", "n", "|ON|", "|OFF|"
    );
    for kind in GateKind::ALL {
        let n = if kind == GateKind::Not { 1 } else { 3 };
        let t = make_gate(GateFamily::new(kind, n)?);
        let sets = on_off_sets(&t);
        println!(
            "{:<9} {:>2}  {:>5} {:>5}  {}",
            kind.name(),
            n,
            sets.on_cardinality(),
            sets.off_cardinality(),
            t
        );
    }

    // even fan-in majority is rejected rather than tie-broken
    match GateFamily::new(GateKind::Majority, 4) {
        Err(e) => println!("\nMAJORITY n=4: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
