// SPDX-License-Identifier: Apache-2.0

//! Plot-ready CSV of both metrics for every gate family, n = 1..7, through
//! the same entry point the `maskmetric` binary uses.
//!
//!     cargo run --example figure_sweep > sweep.csv

use maskmetric::cli;

fn main() {
    let args = [
        "maskmetric",
        "sweep",
        "--families",
        "all",
        "--n",
        "1..7",
        "--metric",
        "both",
        "--method",
        "both",
        "--format",
        "csv",
    ];
    let code = cli::run(args, &mut std::io::stdout(), &mut std::io::sink());
    std::process::exit(code);
}
