//! Builds the solution-free colorings of [C(m,a) - 1] and the two small-case
//! extremal colorings for a = 3, and checks each.
//!
//!     cargo run --example lower_bound_colorings -- 4

use rado::{
    ceiling_formula, is_valid_coloring, proposition1_coloring, theorem2_small_coloring,
    RadoEquation,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(3);
    for m in 3..=2 * a * a + 6 {
        let eq = RadoEquation::new(m, a)?;
        let col = proposition1_coloring(&eq)?;
        println!(
            "{eq} C={:>3} red 1..{:<3} of [{:>3}] valid={}",
            ceiling_formula(&eq)?,
            col.red().len(),
            col.n(),
            is_valid_coloring(&col, &eq)
        );
    }
    for m in [5, 6] {
        let eq = RadoEquation::new(m, 3)?;
        let col = theorem2_small_coloring(m)?;
        println!(
            "{eq} small case {col} valid={}",
            is_valid_coloring(&col, &eq)
        );
    }
    Ok(())
}
