//! Solution-free colorings that certify lower bounds.

use crate::coloring::Coloring;
use crate::equation::RadoEquation;
use crate::error::{RadoError, Result};
use crate::formula::{ceil_div, ceiling_formula};

/// Colors `1..ceil((m-1)/a) - 1` red and the rest of `[C(m,a) - 1]` blue.
/// Returns the empty coloring when `C(m, a) = 1`.
pub fn proposition1_coloring(eq: &RadoEquation) -> Result<Coloring> {
    if eq.a() < 3 || eq.m() < 3 {
        return Err(RadoError::Unsupported(format!(
            "lower-bound coloring needs a >= 3 and m >= 3, got {eq}"
        )));
    }
    let c = ceiling_formula(eq)?;
    if c == 1 {
        return Ok(Coloring::empty());
    }
    let n = usize::try_from(c - 1).map_err(|_| RadoError::Overflow("coloring size"))?;
    let red_top = (ceil_div(eq.left_terms(), eq.a()) - 1) as usize;
    Coloring::new(n, 1..=red_top.min(n))
}

/// Extremal colorings for `L(6, 3)` (`R = {1, 4}` of `[4]`) and `L(5, 3)`
/// (`R = {1, 3}` of `[3]`).
pub fn theorem2_small_coloring(m: u64) -> Result<Coloring> {
    match m {
        6 => Coloring::new(4, [1, 4]),
        5 => Coloring::new(3, [1, 3]),
        _ => Err(RadoError::Unsupported(format!(
            "no tabulated small-case coloring for m = {m} (only 5 and 6)"
        ))),
    }
}
