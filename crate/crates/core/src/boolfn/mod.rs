// SPDX-License-Identifier: Apache-2.0

//! Small single-output Boolean functions as explicit truth tables.
//!
//! Input pattern `i` assigns `(i >> j) & 1` to input `j`, so the first
//! declared input is bit 0 and toggles fastest. A table over `n` inputs has
//! exactly `2^n` entries, with `1 <= n <= 16`.

pub mod expr;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::MAX_INPUTS;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n_inputs: usize,
    outputs: Vec<bool>,
}

fn check_inputs(n: usize) -> Result<()> {
    if (1..=MAX_INPUTS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InputCount(n))
    }
}

impl TruthTable {
    pub fn new(n_inputs: usize, outputs: Vec<bool>) -> Result<Self> {
        check_inputs(n_inputs)?;
        let expected = 1usize << n_inputs;
        if outputs.len() != expected {
            return Err(Error::TableLength {
                n: n_inputs,
                expected,
                actual: outputs.len(),
            });
        }
        Ok(Self { n_inputs, outputs })
    }

    /// Builds a table by evaluating `f` on every pattern index.
    pub fn from_fn(n_inputs: usize, f: impl FnMut(usize) -> bool) -> Result<Self> {
        check_inputs(n_inputs)?;
        let outputs = (0..1usize << n_inputs).map(f).collect();
        Ok(Self { n_inputs, outputs })
    }

    /// Builds a table from 0/1 output values.
    pub fn from_bits(n_inputs: usize, bits: &[u8]) -> Result<Self> {
        Self::new(n_inputs, bits.iter().map(|&b| b != 0).collect())
    }

    pub fn constant(n_inputs: usize, value: bool) -> Result<Self> {
        Self::from_fn(n_inputs, |_| value)
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    /// Number of input patterns, `2^n`.
    pub fn size(&self) -> usize {
        self.outputs.len()
    }

    pub fn output(&self, pattern: usize) -> bool {
        self.outputs[pattern]
    }

    pub fn outputs(&self) -> &[bool] {
        &self.outputs
    }

    pub fn bits(&self) -> Vec<u8> {
        self.outputs.iter().map(|&b| b as u8).collect()
    }

    pub fn complement(&self) -> Self {
        Self {
            n_inputs: self.n_inputs,
            outputs: self.outputs.iter().map(|&b| !b).collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.outputs.iter().all(|&b| b == self.outputs[0])
    }

    /// Returns the table of `g(x) = f(y)` where input `j` of `f` is fed by
    /// input `perm[j]` of `g`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n_inputs, "permutation length");
        let mut seen = vec![false; self.n_inputs];
        for &p in perm {
            assert!(p < self.n_inputs && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let outputs = (0..self.size())
            .map(|x| {
                let y = perm
                    .iter()
                    .enumerate()
                    .fold(0usize, |acc, (j, &src)| acc | (((x >> src) & 1) << j));
                self.outputs[y]
            })
            .collect();
        Self {
            n_inputs: self.n_inputs,
            outputs,
        }
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.outputs {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// The nine gate types, in the fixed order used for sweeps and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateKind {
    Not,
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Majority,
    Minority,
}

impl GateKind {
    pub const ALL: [GateKind; 9] = [
        GateKind::Not,
        GateKind::And,
        GateKind::Nand,
        GateKind::Or,
        GateKind::Nor,
        GateKind::Xor,
        GateKind::Xnor,
        GateKind::Majority,
        GateKind::Minority,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::Not => "NOT",
            GateKind::And => "AND",
            GateKind::Nand => "NAND",
            GateKind::Or => "OR",
            GateKind::Nor => "NOR",
            GateKind::Xor => "XOR",
            GateKind::Xnor => "XNOR",
            GateKind::Majority => "MAJORITY",
            GateKind::Minority => "MINORITY",
        }
    }

    /// Whether `arity` is legal for this kind, with the violated rule if not.
    pub fn check_arity(self, arity: usize) -> std::result::Result<(), &'static str> {
        if arity > MAX_INPUTS {
            return Err("at most 16 inputs are supported");
        }
        match self {
            GateKind::Not if arity != 1 => Err("NOT has exactly one input"),
            GateKind::Majority | GateKind::Minority if arity < 3 || arity.is_multiple_of(2) => {
                Err("majority/minority needs an odd input count >= 3")
            }
            GateKind::And
            | GateKind::Nand
            | GateKind::Or
            | GateKind::Nor
            | GateKind::Xor
            | GateKind::Xnor
                if arity < 2 =>
            {
                Err("needs at least two inputs")
            }
            _ => Ok(()),
        }
    }

    pub fn is_legal_arity(self, arity: usize) -> bool {
        self.check_arity(arity).is_ok()
    }

    /// AND/NAND/OR/NOR: exactly one of the ON/OFF sets is a singleton.
    pub fn is_singleton(self) -> bool {
        matches!(
            self,
            GateKind::And | GateKind::Nand | GateKind::Or | GateKind::Nor
        )
    }

    /// XOR/XNOR/MAJORITY/MINORITY: equal ON/OFF cardinalities.
    pub fn is_equivalent(self) -> bool {
        matches!(
            self,
            GateKind::Xor | GateKind::Xnor | GateKind::Majority | GateKind::Minority
        )
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "not" | "inv" => GateKind::Not,
            "and" => GateKind::And,
            "nand" => GateKind::Nand,
            "or" => GateKind::Or,
            "nor" => GateKind::Nor,
            "xor" => GateKind::Xor,
            "xnor" => GateKind::Xnor,
            "maj" | "majority" => GateKind::Majority,
            "min" | "minority" => GateKind::Minority,
            _ => return Err(Error::UnknownGate(s.to_string())),
        })
    }
}

/// A gate kind together with a legal fan-in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GateFamily {
    kind: GateKind,
    arity: usize,
}

impl GateFamily {
    pub fn new(kind: GateKind, arity: usize) -> Result<Self> {
        kind.check_arity(arity)
            .map_err(|rule| Error::Arity { kind, arity, rule })?;
        Ok(Self { kind, arity })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

impl fmt::Display for GateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.arity)
    }
}

/// Complete truth table of a gate.
pub fn make_gate(family: GateFamily) -> TruthTable {
    let n = family.arity;
    let threshold = (n as u32).div_ceil(2);
    let all_ones = (1usize << n) - 1;
    let eval = |p: usize| -> bool {
        let ones = p.count_ones();
        match family.kind {
            GateKind::Not => p == 0,
            GateKind::And => p == all_ones,
            GateKind::Nand => p != all_ones,
            GateKind::Or => p != 0,
            GateKind::Nor => p == 0,
            GateKind::Xor => ones % 2 == 1,
            GateKind::Xnor => ones.is_multiple_of(2),
            GateKind::Majority => ones >= threshold,
            GateKind::Minority => ones < threshold,
        }
    };
    TruthTable::from_fn(n, eval).expect("arity validated by GateFamily")
}

/// ON-set and OFF-set of a function, as ascending pattern indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnOffSets {
    pub on_set: Vec<usize>,
    pub off_set: Vec<usize>,
}

impl OnOffSets {
    pub fn on_cardinality(&self) -> usize {
        self.on_set.len()
    }

    pub fn off_cardinality(&self) -> usize {
        self.off_set.len()
    }
}

pub fn on_off_sets(t: &TruthTable) -> OnOffSets {
    let (on_set, off_set) = (0..t.size()).partition(|&p| t.output(p));
    OnOffSets { on_set, off_set }
}

/// Number of bit positions in which two patterns differ.
pub fn hamming(p: usize, q: usize) -> u32 {
    (p ^ q).count_ones()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gate(kind: GateKind, n: usize) -> TruthTable {
        make_gate(GateFamily::new(kind, n).unwrap())
    }

    #[test]
    fn majority_and_minority_three_inputs() {
        assert_eq!(gate(GateKind::Majority, 3).bits(), [0, 0, 0, 1, 0, 1, 1, 1]);
        assert_eq!(gate(GateKind::Minority, 3).bits(), [1, 1, 1, 0, 1, 0, 0, 0]);
        assert_eq!(gate(GateKind::Not, 1).bits(), [1, 0]);
    }

    #[test]
    fn majority_five_threshold() {
        let t = gate(GateKind::Majority, 5);
        let on: Vec<usize> = (0..32).filter(|&p| t.output(p)).collect();
        let expected: Vec<usize> = (0..32usize).filter(|p| p.count_ones() >= 3).collect();
        assert_eq!(on, expected);
        assert_eq!(on.len(), 16);
    }

    #[test]
    fn two_input_gates() {
        assert_eq!(gate(GateKind::And, 2).bits(), [0, 0, 0, 1]);
        assert_eq!(gate(GateKind::Nand, 2).bits(), [1, 1, 1, 0]);
        assert_eq!(gate(GateKind::Or, 2).bits(), [0, 1, 1, 1]);
        assert_eq!(gate(GateKind::Nor, 2).bits(), [1, 0, 0, 0]);
        assert_eq!(gate(GateKind::Xor, 2).bits(), [0, 1, 1, 0]);
        assert_eq!(gate(GateKind::Xnor, 2).bits(), [1, 0, 0, 1]);
    }

    #[test]
    fn arity_rules() {
        use GateKind::*;
        for (kind, n) in [
            (Majority, 4),
            (Minority, 2),
            (Majority, 1),
            (Not, 2),
            (Not, 0),
            (And, 1),
            (Xor, 0),
            (Or, 17),
            (Majority, 17),
        ] {
            assert!(
                matches!(GateFamily::new(kind, n), Err(Error::Arity { .. })),
                "{kind} {n}"
            );
        }
        assert!(GateFamily::new(Majority, 15).is_ok());
        assert!(GateFamily::new(Xor, 16).is_ok());
    }

    #[test]
    fn table_construction_rejects_bad_shapes() {
        assert_eq!(TruthTable::new(0, vec![false]), Err(Error::InputCount(0)));
        assert_eq!(TruthTable::constant(17, true), Err(Error::InputCount(17)));
        assert!(matches!(
            TruthTable::from_bits(2, &[0, 1, 1]),
            Err(Error::TableLength {
                expected: 4,
                actual: 3,
                ..
            })
        ));
    }

    #[test]
    fn on_off_examples() {
        let s = on_off_sets(&gate(GateKind::Majority, 3));
        assert_eq!(s.on_set, [3, 5, 6, 7]);
        assert_eq!(s.off_set, [0, 1, 2, 4]);
        let s = on_off_sets(&gate(GateKind::And, 2));
        assert_eq!(s.on_set, [3]);
        assert_eq!(s.off_set, [0, 1, 2]);
        let s = on_off_sets(&gate(GateKind::Xor, 3));
        assert_eq!((s.on_cardinality(), s.off_cardinality()), (4, 4));
    }

    #[test]
    fn cardinalities_by_family() {
        for n in 2..=10 {
            for kind in GateKind::ALL {
                let Ok(fam) = GateFamily::new(kind, n) else {
                    continue;
                };
                let s = on_off_sets(&make_gate(fam));
                let (on, off) = (s.on_cardinality(), s.off_cardinality());
                assert_eq!(on + off, 1 << n);
                if kind.is_equivalent() {
                    assert_eq!((on, off), (1 << (n - 1), 1 << (n - 1)), "{fam}");
                }
                match kind {
                    GateKind::And | GateKind::Nor => assert_eq!(on, 1),
                    GateKind::Nand | GateKind::Or => assert_eq!(off, 1),
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn complement_pairs() {
        use GateKind::*;
        for n in 2..=9 {
            for (a, b) in [(And, Nand), (Or, Nor), (Xor, Xnor), (Majority, Minority)] {
                if !a.is_legal_arity(n) {
                    continue;
                }
                assert_eq!(gate(a, n).complement(), gate(b, n));
            }
        }
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming(0b011, 0b000), 2);
        assert_eq!(hamming(0b011, 0b001), 1);
        assert_eq!(hamming(0b011, 0b010), 1);
        assert_eq!(hamming(0b011, 0b100), 3);
        assert_eq!(hamming(5, 5), 0);
    }

    #[test]
    fn permutation_moves_inputs() {
        // f = A & !B over (A, B); swapping inputs gives !A & B
        let t = TruthTable::from_fn(2, |p| p == 0b01).unwrap();
        assert_eq!(t.permute_inputs(&[1, 0]).bits(), [0, 0, 1, 0]);
        assert_eq!(t.permute_inputs(&[0, 1]), t);
    }

    fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn gate_tables_are_symmetric(
            (n, perm) in (1usize..=8).prop_flat_map(|n| (Just(n), permutation(n))),
            kind_idx in 0usize..9,
        ) {
            let kind = GateKind::ALL[kind_idx];
            if let Ok(fam) = GateFamily::new(kind, n) {
                let t = make_gate(fam);
                prop_assert_eq!(t.permute_inputs(&perm), t);
            }
        }

        #[test]
        fn hamming_is_a_metric(p in 0usize..1 << 16, q in 0usize..1 << 16, r in 0usize..1 << 16) {
            prop_assert_eq!(hamming(p, q), hamming(q, p));
            prop_assert_eq!(hamming(p, q) == 0, p == q);
            prop_assert!(hamming(p, r) <= hamming(p, q) + hamming(q, r));
        }
    }
}
