// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

fn maskmetric(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maskmetric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_majority() {
    let o = maskmetric(&[
        "analyze", "--gate", "maj", "--n", "3", "--metric", "gemnif", "--method", "both",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "MAJORITY n=3 GEMNIF: 1/3 = 0.3333 (agree)\n");
}

#[test]
fn analyze_expression_table() {
    let o = maskmetric(&[
        "analyze",
        "--expr",
        "MAJ(a,b,c)",
        "--metric",
        "gemfic",
        "--method",
        "oracle",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "expr \"MAJ(a,b,c)\" [a, b, c] GEMFIC: 4/7 = 0.5714\n"
    );
}

#[test]
fn sweep_is_deterministic() {
    let args = [
        "sweep",
        "--families",
        "all",
        "--n",
        "1..6",
        "--format",
        "json",
    ];
    let a = maskmetric(&args);
    let b = maskmetric(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let first = &v[0];
    assert_eq!(first["family"], "NOT");
    assert_eq!(first["metric"], "GEMNIF");
    assert_eq!(first["numerator"], 1);
    assert_eq!(first["source"], "both(agree)");
}

#[test]
fn sweep_rows_are_ordered() {
    let o = maskmetric(&[
        "sweep",
        "--families",
        "min,xor,not",
        "--n",
        "1..3",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let keys: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(3).collect::<Vec<_>>().join(","))
        .collect();
    assert_eq!(
        keys,
        [
            "NOT,1,GEMNIF",
            "NOT,1,GEMFIC",
            "XOR,2,GEMNIF",
            "XOR,2,GEMFIC",
            "XOR,3,GEMNIF",
            "XOR,3,GEMFIC",
            "MINORITY,3,GEMNIF",
            "MINORITY,3,GEMFIC",
        ]
    );
    let notes = String::from_utf8(o.stderr).unwrap();
    assert!(notes.contains("skipping NOT n=2"));
    assert!(notes.contains("skipping MINORITY n=1"));
}

#[test]
fn table_format_sweep() {
    let o = maskmetric(&[
        "sweep",
        "--families",
        "and",
        "--n",
        "2",
        "--metric",
        "gemnif",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("family"));
    assert!(text.contains("3/8"));
    assert!(text.contains("0.3750"));
}

#[test]
fn compare_json() {
    let o = maskmetric(&[
        "compare", "--gate", "maj", "--n", "3", "5", "--metric", "gemnif", "--format", "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["to_value"], "0.2000");
    assert_eq!(v[0]["reduction"], "40.0%");
}

#[test]
fn exit_codes() {
    assert_eq!(maskmetric(&[]).status.code(), Some(2));
    assert_eq!(
        maskmetric(&["analyze", "--gate", "min", "--n", "6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(maskmetric(&["work", "--n", "0"]).status.code(), Some(2));
    assert_eq!(
        maskmetric(&["analyze", "--expr", "a & (b"]).status.code(),
        Some(2)
    );
    assert_eq!(
        maskmetric(&["sweep", "--n", "1..3", "--precision", "99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(maskmetric(&["--help"]).status.code(), Some(0));
}
