// SPDX-License-Identifier: Apache-2.0

//! Exact non-negative rationals and decimal rendering.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-negative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactRatio {
    numer: u128,
    denom: u128,
}

impl ExactRatio {
    pub const ZERO: ExactRatio = ExactRatio { numer: 0, denom: 1 };
    pub const ONE: ExactRatio = ExactRatio { numer: 1, denom: 1 };

    pub fn new(numer: u128, denom: u128) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        Ok(Self {
            numer: numer / g,
            denom: denom / g,
        })
    }

    pub fn numer(&self) -> u128 {
        self.numer
    }

    pub fn denom(&self) -> u128 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        // cross-reduce first so intermediate products stay small
        let g1 = self.numer.gcd(&rhs.denom).max(1);
        let g2 = rhs.numer.gcd(&self.denom).max(1);
        let n = (self.numer / g1)
            .checked_mul(rhs.numer / g2)
            .ok_or(Error::Overflow)?;
        let d = (self.denom / g2)
            .checked_mul(rhs.denom / g1)
            .ok_or(Error::Overflow)?;
        Self::new(n, d)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.numer == 0 {
            return Err(Error::ZeroDenominator);
        }
        self.checked_mul(Self {
            numer: rhs.denom,
            denom: rhs.numer,
        })
    }

    /// Decimal rendering with `places` digits after the point, rounded half
    /// away from zero.
    pub fn to_decimal(&self, places: usize) -> String {
        render_decimal(false, self.numer, self.denom, places)
    }

    pub fn to_f64(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl Default for ExactRatio {
    fn default() -> Self {
        Self::ZERO
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        match (
            self.numer.checked_mul(other.denom),
            other.numer.checked_mul(self.denom),
        ) {
            (Some(a), Some(b)) => a.cmp(&b),
            // only reachable for values far outside anything this crate builds
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

/// Renders `±numer/denom` with exactly `places` fractional digits, rounding
/// half away from zero. Pure integer arithmetic.
pub fn render_decimal(negative: bool, numer: u128, denom: u128, places: usize) -> String {
    assert!(denom > 0, "render_decimal: zero denominator");
    let scale = 10u128.pow(places as u32);
    let int_part = numer / denom;
    let rem = numer % denom;
    // rem < denom, so rem * scale only overflows for absurd precisions
    let scaled = rem * scale;
    let mut frac = scaled / denom;
    let frac_rem = scaled % denom;
    let mut int_part = int_part;
    if frac_rem * 2 >= denom {
        frac += 1;
        if frac == scale {
            frac = 0;
            int_part += 1;
        }
    }
    let sign = if negative && (int_part != 0 || frac != 0) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac:0width$}", width = places)
    }
}
