//! Grouped solution notation: parse, evaluate, expand, and double.
//!
//!     cargo run --example solution_templates

use rado::{RadoEquation, SolutionTemplate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (16, 3, "[15->5; 1->25]"),
        (16, 3, "[6->3; 8->4; 2->25]"),
        (6, 3, "[2->2; 2->3; 2->5]"),
        (5, 3, "[2->1; 3->2]"),
        (8, 3, "[7->2; 1->5]"),
    ];
    for (m, a, text) in cases {
        let eq = RadoEquation::new(m, a)?;
        let t: SolutionTemplate = text.parse()?;
        let (left, target) = t.values(m)?;
        let doubled = t.scaled(2)?;
        println!(
            "{eq} {t}: {} | left {:?} = {} vs {a}*{target} | doubled {doubled}: {}",
            t.evaluate(&eq)?,
            left,
            left.iter().sum::<u64>(),
            doubled.evaluate(&eq)?
        );
    }
    Ok(())
}
