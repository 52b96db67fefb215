// SPDX-License-Identifier: Apache-2.0

//! Parse sum-of-products and product-of-sums forms of the 3-input majority
//! function and check them against the gate constructor.
//!
//!     cargo run --example expressions -- "a&b | !c"

use maskmetric::{compile_expr, make_gate, parse_expr, GateFamily, GateKind};

fn main() -> maskmetric::Result<()> {
    let maj3 = make_gate(GateFamily::new(GateKind::Majority, 3)?);

    for text in [
        "A&B | B&C | A&C",
        "(A|B) & (B|C) & (A|C)",
        "(A|B) & (A&B | C)",
        "MAJ(A, B, C)",
        "!MIN(A, B, C)",
    ] {
        let e = parse_expr(text)?;
        let t = compile_expr(&e)?;
        println!(
            "{text:<24} -> {e:<30} vars {:?} table {t} {}",
            e.vars(),
            if t == maj3 { "== MAJ3" } else { "!= MAJ3" }
        );
    }

    if let Some(user) = std::env::args().nth(1) {
        println!();
        match parse_expr(&user).and_then(|e| compile_expr(&e).map(|t| (e, t))) {
            Ok((e, t)) => println!("{e}\nvars {:?}\ntable {t}", e.vars()),
            Err(err) => println!("error: {err}"),
        }
    }

    for bad in ["A & (B | C", "MAJ(a, b)", "a + b"] {
        println!("{bad:<12} -> {}", parse_expr(bad).unwrap_err());
    }
    Ok(())
}
