// SPDX-License-Identifier: Apache-2.0

//! Per-pattern fault breakdown: for every applied input pattern, how many
//! faulty patterns lie at each Hamming distance and how many of those flip
//! the output.
//!
//!     cargo run --example fault_profile -- "A&B|C"

use maskmetric::faultmodel::profile;
use maskmetric::{compile_expr, parse_expr};

fn main() -> maskmetric::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "MAJ(A,B,C)".into());
    let e = parse_expr(&text)?;
    let t = compile_expr(&e)?;
    let prof = profile(&t);
    let n = t.n_inputs();

    println!(
        "{text}  (variables {:?}; pattern bits print last variable first)",
        e.vars()
    );
    print!("pattern f |");
    for k in 1..=n {
        print!("  d={k} err/all");
    }
    println!();
    for p in 0..t.size() {
        let bits: String = (0..n)
            .rev()
            .map(|j| if (p >> j) & 1 == 1 { '1' } else { '0' })
            .collect();
        print!("{bits:>7} {} |", t.output(p) as u8);
        for b in prof.pattern(p) {
            print!("  {:>5}/{:<5}", b.erroneous, b.faulty_patterns);
        }
        println!();
    }
    println!();
    println!("output errors        {}", prof.total_output_errors());
    println!("input bit-faults     {}", prof.total_fault_count());
    println!("faulty patterns      {}", prof.total_faulty_patterns());
    println!(
        "GEMNIF               {} = {}",
        prof.gemnif(),
        prof.gemnif().to_decimal(4)
    );
    println!(
        "GEMFIC               {} = {}",
        prof.gemfic(),
        prof.gemfic().to_decimal(4)
    );
    Ok(())
}
