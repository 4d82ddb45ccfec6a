use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{RadoError, Result};

/// The equation `x_1 + x_2 + ... + x_{m-1} = a * x_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawEquation", into = "RawEquation")]
pub struct RadoEquation {
    m: u64,
    a: u64,
}

impl RadoEquation {
    /// Rejects `m < 2`, `a < 1`, and any `m` whose `(m - 1)^2` does not fit in an `i64`.
    pub fn new(m: u64, a: u64) -> Result<Self> {
        if m < 2 || a < 1 {
            return Err(RadoError::InvalidEquation { m, a });
        }
        let (Ok(mi), Ok(_)) = (i64::try_from(m), i64::try_from(a)) else {
            return Err(RadoError::Overflow("equation parameters"));
        };
        (mi - 1)
            .checked_mul(mi - 1)
            .ok_or(RadoError::Overflow("(m-1)^2"))?;
        Ok(Self { m, a })
    }

    /// Number of variables; the left side has `m - 1` terms.
    pub fn m(&self) -> u64 {
        self.m
    }

    /// Coefficient on `x_m`.
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn left_terms(&self) -> u64 {
        self.m - 1
    }
}

impl fmt::Display for RadoEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.m, self.a)
    }
}

#[derive(Serialize, Deserialize)]
struct RawEquation {
    a: u64,
    m: u64,
}

impl TryFrom<RawEquation> for RadoEquation {
    type Error = RadoError;

    fn try_from(raw: RawEquation) -> Result<Self> {
        RadoEquation::new(raw.m, raw.a)
    }
}

impl From<RadoEquation> for RawEquation {
    fn from(eq: RadoEquation) -> Self {
        RawEquation { a: eq.a, m: eq.m }
    }
}
