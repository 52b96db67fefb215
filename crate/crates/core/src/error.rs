// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::boolfn::GateKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input count {0} outside supported range 1..=16")]
    InputCount(usize),

    #[error("truth table for {n} inputs needs {expected} outputs, got {actual}")]
    TableLength {
        n: usize,
        expected: usize,
        actual: usize,
    },

    #[error("{kind} gate cannot have {arity} inputs ({rule})")]
    Arity {
        kind: GateKind,
        arity: usize,
        rule: &'static str,
    },

    #[error("unknown gate `{0}`")]
    UnknownGate(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("{name} at position {pos} takes an odd number of arguments >= 3, got {arity}")]
    CallArity {
        name: &'static str,
        pos: usize,
        arity: usize,
    },

    #[error("expression has {0} distinct variables, at most 16 are supported")]
    TooManyVariables(usize),

    #[error("expression has no variables")]
    ZeroVariables,

    #[error("division by zero")]
    ZeroDenominator,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("percent reduction from a zero baseline is undefined")]
    ZeroBaseline,
}

pub type Result<T> = std::result::Result<T, Error>;
