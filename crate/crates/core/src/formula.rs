//! Closed-form values of `C(m, a) = ceil((m-1)/a * ceil((m-1)/a))` and the
//! known exact Rado numbers for the family.
//!
//! Everything here is exact integer arithmetic. `C(m, a)` is evaluated
//! inside-out: the inner ceiling first, then the outer ceiling of
//! `(m-1) * inner / a`. Flattening the nested ceiling changes the value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::equation::RadoEquation;
use crate::error::{RadoError, Result};

/// `ceil(p / q)` for `q > 0`.
#[inline]
pub fn ceil_div(p: u64, q: u64) -> u64 {
    debug_assert!(q > 0);
    p / q + u64::from(!p.is_multiple_of(q))
}

/// `C(m, a)`.
pub fn ceiling_formula(eq: &RadoEquation) -> Result<u64> {
    let (m1, a) = (eq.left_terms(), eq.a());
    let inner = ceil_div(m1, a);
    let product = m1.checked_mul(inner).ok_or(RadoError::Overflow("C(m,a)"))?;
    Ok(ceil_div(product, a))
}

/// Which closed form applies, by the remainder `c` of `m` mod `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormCase {
    /// `c = 1`: `C = (m-1)^2 / a^2`.
    RemainderOne,
    /// `c = 0`: `C = (m^2 - m + va) / a^2`.
    RemainderZero,
    /// `2 <= c <= a-1`: `C = (m^2 + (a-c-1)m + c - ac - vac + va + ta^2) / a^2`.
    General,
}

impl fmt::Display for ClosedFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosedFormCase::RemainderOne => "case (i): c = 1",
            ClosedFormCase::RemainderZero => "case (ii): c = 0",
            ClosedFormCase::General => "case (iii): 2 <= c <= a-1",
        })
    }
}

/// `m = u*a^2 + v*a + c` with `u` maximal and `0 <= v, c <= a-1`, plus the
/// correction `t = ceil((c-1)(v+1)/a)` used when `c >= 2` (zero otherwise).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaBreakdown {
    pub u: u64,
    pub v: u64,
    pub c: u64,
    pub t: u64,
}

impl FormulaBreakdown {
    pub fn case(&self) -> ClosedFormCase {
        match self.c {
            0 => ClosedFormCase::RemainderZero,
            1 => ClosedFormCase::RemainderOne,
            _ => ClosedFormCase::General,
        }
    }
}

pub fn decompose(eq: &RadoEquation) -> Result<FormulaBreakdown> {
    let (m, a) = (eq.m(), eq.a());
    if a < 2 {
        return Err(RadoError::Unsupported(
            "base-a decomposition needs a >= 2".into(),
        ));
    }
    let a2 = a.checked_mul(a).ok_or(RadoError::Overflow("a^2"))?;
    let (u, r) = (m / a2, m % a2);
    let (v, c) = (r / a, r % a);
    let t = if c >= 2 {
        ceil_div((c - 1) * (v + 1), a)
    } else {
        0
    };
    Ok(FormulaBreakdown { u, v, c, t })
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| RadoError::Overflow("closed form operand"))
}

/// `C(m, a)` through the three remainder-dependent closed forms. The division
/// by `a^2` must be exact; a remainder means the implementation is wrong.
pub fn closed_form(eq: &RadoEquation) -> Result<u64> {
    let b = decompose(eq)?;
    let ovf = || RadoError::Overflow("closed form");
    let (m, a) = (to_i64(eq.m())?, to_i64(eq.a())?);
    let (v, c, t) = (to_i64(b.v)?, to_i64(b.c)?, to_i64(b.t)?);
    let a2 = a.checked_mul(a).ok_or_else(ovf)?;
    let m2 = m.checked_mul(m).ok_or_else(ovf)?;
    let va = v.checked_mul(a).ok_or_else(ovf)?;
    let numerator = match b.case() {
        ClosedFormCase::RemainderOne => (m - 1).checked_mul(m - 1).ok_or_else(ovf)?,
        ClosedFormCase::RemainderZero => m2
            .checked_sub(m)
            .and_then(|x| x.checked_add(va))
            .ok_or_else(ovf)?,
        ClosedFormCase::General => {
            let linear = (a - c - 1).checked_mul(m).ok_or_else(ovf)?;
            let ac = a.checked_mul(c).ok_or_else(ovf)?;
            let vac = va.checked_mul(c).ok_or_else(ovf)?;
            let ta2 = t.checked_mul(a2).ok_or_else(ovf)?;
            [linear, c, -ac, -vac, va, ta2]
                .into_iter()
                .try_fold(m2, i64::checked_add)
                .ok_or_else(ovf)?
        }
    };
    if numerator % a2 != 0 || numerator <= 0 {
        return Err(RadoError::Invariant(format!(
            "closed form numerator {numerator} for {eq} is not a positive multiple of {a2}"
        )));
    }
    Ok((numerator / a2) as u64)
}

/// `2m - 2 <= C(m, a)` and `a + 1 <= C(m, a)`.
pub fn lemma1_holds(eq: &RadoEquation) -> Result<bool> {
    let c = ceiling_formula(eq)?;
    let two_m_minus_2 = eq
        .left_terms()
        .checked_mul(2)
        .ok_or(RadoError::Overflow("2m-2"))?;
    let a_plus_1 = eq.a().checked_add(1).ok_or(RadoError::Overflow("a+1"))?;
    Ok(two_m_minus_2 <= c && a_plus_1 <= c)
}

/// `ac - a <= -vac + va + ta^2 <= ac - a + a^2` with `t = ceil((c-1)(v+1)/a)`.
pub fn lemma11_holds(a: u64, v: u64, c: u64) -> Result<bool> {
    if a < 3 || v >= a || c < 2 || c >= a {
        return Err(RadoError::Unsupported(format!(
            "need a >= 3, 0 <= v <= a-1, 2 <= c <= a-1 (got a={a}, v={v}, c={c})"
        )));
    }
    let ovf = || RadoError::Overflow("lemma 11 bounds");
    let t = to_i64(ceil_div((c - 1).checked_mul(v + 1).ok_or_else(ovf)?, a))?;
    let (a, v, c) = (to_i64(a)?, to_i64(v)?, to_i64(c)?);
    let a2 = a.checked_mul(a).ok_or_else(ovf)?;
    let va = v.checked_mul(a).ok_or_else(ovf)?;
    let middle = [va, -va.checked_mul(c).ok_or_else(ovf)?]
        .into_iter()
        .try_fold(t.checked_mul(a2).ok_or_else(ovf)?, i64::checked_add)
        .ok_or_else(ovf)?;
    let lower = a.checked_mul(c - 1).ok_or_else(ovf)?;
    let upper = lower.checked_add(a2).ok_or_else(ovf)?;
    Ok(lower <= middle && middle <= upper)
}

/// Smallest `m` covered by the general `a >= 3` result: `2a^2 - a + 2`.
pub fn theorem1_threshold(a: u64) -> Option<u64> {
    a.checked_mul(a)?
        .checked_mul(2)?
        .checked_sub(a)?
        .checked_add(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownSource {
    /// `a >= 3`, `m >= 2a^2 - a + 2`: `C(m, a)`.
    Theorem1,
    /// `a = 3`, `m` in `{3, 4, 5, 6}`: the tabulated values `9, 1, 4, 5`.
    Theorem2Small,
    /// `a = 3`, `m >= 7`: `C(m, 3)`.
    Theorem2,
    /// `a = 1`, `m >= 3`: `m^2 - m - 1`.
    BbA1,
    /// `a = 2`, `m >= 6`: `C(m, 2)`.
    SvA2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnownNumber {
    pub value: u64,
    pub source: KnownSource,
}

/// The exact 2-color Rado number where a published result covers `eq`.
pub fn known_rado_number(eq: &RadoEquation) -> Option<KnownNumber> {
    let (m, a) = (eq.m(), eq.a());
    let known = |value, source| Some(KnownNumber { value, source });
    match a {
        1 if m >= 3 => known((m - 1).checked_mul(m)?.checked_sub(1)?, KnownSource::BbA1),
        2 if m >= 6 => known(ceiling_formula(eq).ok()?, KnownSource::SvA2),
        3 => match m {
            3 => known(9, KnownSource::Theorem2Small),
            4 => known(1, KnownSource::Theorem2Small),
            5 => known(4, KnownSource::Theorem2Small),
            6 => known(5, KnownSource::Theorem2Small),
            m if m >= 7 => {
                let source = if m >= theorem1_threshold(3)? {
                    KnownSource::Theorem1
                } else {
                    KnownSource::Theorem2
                };
                known(ceiling_formula(eq).ok()?, source)
            }
            _ => None,
        },
        a if a >= 4 && m >= theorem1_threshold(a)? => {
            known(ceiling_formula(eq).ok()?, KnownSource::Theorem1)
        }
        _ => None,
    }
}
