// SPDX-License-Identifier: Apache-2.0

//! Reference enumeration of input faults.
//!
//! Every ordered pair `(p, q)` of distinct input patterns is visited: `p` is
//! the applied pattern, `q` the pattern the gate actually sees after
//! `hamming(p, q)` input bits flipped. The pair is an output error when
//! `f(p) != f(q)`. This is a plain `O(4^n)` double loop with no shortcuts;
//! the closed forms in [`crate::metrics`] are checked against it.

use crate::boolfn::{hamming, TruthTable};
use crate::ratio::ExactRatio;

/// Faulty patterns at one Hamming distance from an applied pattern.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DistanceBucket {
    /// Number of faulty patterns at this distance, `C(n, k)`.
    pub faulty_patterns: u64,
    /// How many of them change the output.
    pub erroneous: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultProfile {
    n: usize,
    /// `per_pattern[p][k - 1]` is the bucket for distance `k`.
    per_pattern: Vec<Vec<DistanceBucket>>,
    total_fault_count: u128,
    total_faulty_patterns: u128,
    total_output_errors: u128,
}

impl FaultProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Buckets for applied pattern `p`, indexed by `distance - 1`.
    pub fn pattern(&self, p: usize) -> &[DistanceBucket] {
        &self.per_pattern[p]
    }

    pub fn per_pattern(&self) -> &[Vec<DistanceBucket>] {
        &self.per_pattern
    }

    /// Sum of Hamming distances over all ordered pairs: the number of
    /// individual input bit-faults.
    pub fn total_fault_count(&self) -> u128 {
        self.total_fault_count
    }

    /// `2^n (2^n - 1)`.
    pub fn total_faulty_patterns(&self) -> u128 {
        self.total_faulty_patterns
    }

    pub fn total_output_errors(&self) -> u128 {
        self.total_output_errors
    }

    pub fn gemnif(&self) -> ExactRatio {
        ExactRatio::new(self.total_output_errors, self.total_fault_count)
            .expect("fault count is positive for n >= 1")
    }

    pub fn gemfic(&self) -> ExactRatio {
        ExactRatio::new(self.total_output_errors, self.total_faulty_patterns)
            .expect("faulty pattern count is positive for n >= 1")
    }
}

pub fn profile(t: &TruthTable) -> FaultProfile {
    let n = t.n_inputs();
    let size = t.size();
    let mut per_pattern = Vec::with_capacity(size);
    let mut total_fault_count = 0u128;
    let mut total_faulty_patterns = 0u128;
    let mut total_output_errors = 0u128;

    for p in 0..size {
        let mut buckets = vec![DistanceBucket::default(); n];
        let fp = t.output(p);
        for q in 0..size {
            if q == p {
                continue;
            }
            let k = hamming(p, q) as usize;
            let bucket = &mut buckets[k - 1];
            bucket.faulty_patterns += 1;
            total_faulty_patterns += 1;
            total_fault_count += k as u128;
            if t.output(q) != fp {
                bucket.erroneous += 1;
                total_output_errors += 1;
            }
        }
        per_pattern.push(buckets);
    }

    FaultProfile {
        n,
        per_pattern,
        total_fault_count,
        total_faulty_patterns,
        total_output_errors,
    }
}

/// Output errors per individual input bit-fault.
pub fn gemnif_oracle(t: &TruthTable) -> ExactRatio {
    profile(t).gemnif()
}

/// Output errors per faulty input pattern.
pub fn gemfic_oracle(t: &TruthTable) -> ExactRatio {
    profile(t).gemfic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{make_gate, on_off_sets, GateFamily, GateKind};
    use proptest::prelude::*;

    fn gate(kind: GateKind, n: usize) -> TruthTable {
        make_gate(GateFamily::new(kind, n).unwrap())
    }

    fn r(n: u128, d: u128) -> ExactRatio {
        ExactRatio::new(n, d).unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn majority_three_totals() {
        let prof = profile(&gate(GateKind::Majority, 3));
        assert_eq!(prof.total_output_errors(), 32);
        assert_eq!(prof.total_fault_count(), 96);
        assert_eq!(prof.total_faulty_patterns(), 56);
    }

    #[test]
    fn majority_three_pattern_011() {
        // 011 -> errors at 000 (d=2), 001, 010 (d=1), 100 (d=3)
        let prof = profile(&gate(GateKind::Majority, 3));
        let b = prof.pattern(0b011);
        assert_eq!(
            b[0],
            DistanceBucket {
                faulty_patterns: 3,
                erroneous: 2
            }
        );
        assert_eq!(
            b[1],
            DistanceBucket {
                faulty_patterns: 3,
                erroneous: 1
            }
        );
        assert_eq!(
            b[2],
            DistanceBucket {
                faulty_patterns: 1,
                erroneous: 1
            }
        );
    }

    #[test]
    fn and_two_totals() {
        let prof = profile(&gate(GateKind::And, 2));
        assert_eq!(prof.total_output_errors(), 6);
        assert_eq!(prof.total_fault_count(), 16);
        let zero = TruthTable::constant(2, false).unwrap();
        assert_eq!(profile(&zero).total_output_errors(), 0);
    }

    #[test]
    fn oracle_values() {
        assert_eq!(gemnif_oracle(&gate(GateKind::Majority, 3)), r(1, 3));
        assert_eq!(gemnif_oracle(&gate(GateKind::And, 2)), r(3, 8));
        assert_eq!(gemnif_oracle(&gate(GateKind::Not, 1)), ExactRatio::ONE);
        assert_eq!(gemnif_oracle(&gate(GateKind::Majority, 5)), r(1, 5));
        assert_eq!(gemfic_oracle(&gate(GateKind::Majority, 3)), r(4, 7));
        assert_eq!(gemfic_oracle(&gate(GateKind::And, 3)), r(1, 4));
        assert_eq!(gemfic_oracle(&gate(GateKind::Majority, 5)), r(16, 31));
        assert_eq!(gemfic_oracle(&gate(GateKind::Not, 1)), ExactRatio::ONE);
        let one = TruthTable::constant(3, true).unwrap();
        assert_eq!(gemfic_oracle(&one), ExactRatio::ZERO);
    }

    #[test]
    fn bucket_sizes_are_binomial() {
        for n in 1..=8 {
            let prof = profile(&TruthTable::constant(n, false).unwrap());
            let n = n as u64;
            for buckets in prof.per_pattern() {
                let mut total = 0;
                for (i, b) in buckets.iter().enumerate() {
                    let k = i as u64 + 1;
                    assert_eq!(b.faulty_patterns, binom(n, k));
                    assert!(b.erroneous <= b.faulty_patterns);
                    total += b.faulty_patterns;
                }
                assert_eq!(total, (1 << n) - 1);
            }
        }
    }

    #[test]
    fn fault_count_identity() {
        // sum_k C(n,k) k = n 2^(n-1), so the total is n 2^(2n-1)
        for n in 1..=12usize {
            let t = TruthTable::constant(n, false).unwrap();
            let expected = n as u128 * (1u128 << (2 * n - 1));
            assert_eq!(profile(&t).total_fault_count(), expected, "n={n}");
            let sum: u64 = (1..=n as u64).map(|k| binom(n as u64, k) * k).sum();
            assert_eq!(sum as u128 * (1u128 << n), expected);
        }
    }

    #[test]
    fn error_count_is_twice_on_times_off_exhaustive() {
        for n in 1..=3usize {
            for f in 0u32..1 << (1 << n) {
                let t = TruthTable::from_fn(n, |p| (f >> p) & 1 == 1).unwrap();
                let s = on_off_sets(&t);
                let expected = 2 * s.on_cardinality() * s.off_cardinality();
                assert_eq!(profile(&t).total_output_errors(), expected as u128);
            }
        }
    }

    fn table(max_n: usize) -> impl Strategy<Value = TruthTable> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), 1 << n)
                .prop_map(move |v| TruthTable::new(n, v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn complement_invariance(t in table(7)) {
            let c = t.complement();
            prop_assert_eq!(gemnif_oracle(&t), gemnif_oracle(&c));
            prop_assert_eq!(gemfic_oracle(&t), gemfic_oracle(&c));
        }

        #[test]
        fn bounds_and_zero_iff_constant(t in table(7)) {
            let prof = profile(&t);
            let s = on_off_sets(&t);
            prop_assert_eq!(
                prof.total_output_errors(),
                2 * (s.on_cardinality() * s.off_cardinality()) as u128
            );
            let (nif, fic) = (prof.gemnif(), prof.gemfic());
            prop_assert!(nif <= fic && fic <= ExactRatio::ONE);
            prop_assert_eq!(nif.is_zero(), t.is_constant());
            prop_assert_eq!(fic.is_zero(), t.is_constant());
        }
    }
}
