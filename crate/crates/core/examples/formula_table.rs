//! Tabulates C(m, a) with its closed-form breakdown and any known exact value.
//!
//!     cargo run --example formula_table -- 3 20

use rado::{ceiling_formula, closed_form, decompose, known_rado_number, RadoEquation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>());
    let a = args.next().transpose()?.unwrap_or(3);
    let m_max = args.next().transpose()?.unwrap_or(20);

    println!(
        "{:>4} {:>8} {:>4} {:>4} {:>4} {:>4} {:>8}  known",
        "m", "C(m,a)", "u", "v", "c", "t", "closed"
    );
    for m in 2..=m_max {
        let eq = RadoEquation::new(m, a)?;
        let c = ceiling_formula(&eq)?;
        let known = known_rado_number(&eq)
            .map(|k| format!("{} ({:?})", k.value, k.source))
            .unwrap_or_default();
        match decompose(&eq) {
            Ok(b) => println!(
                "{m:>4} {c:>8} {:>4} {:>4} {:>4} {:>4} {:>8}  {known}",
                b.u,
                b.v,
                b.c,
                b.t,
                closed_form(&eq)?
            ),
            Err(_) => println!(
                "{m:>4} {c:>8} {:>4} {:>4} {:>4} {:>4} {:>8}  {known}",
                "-", "-", "-", "-", "-"
            ),
        }
    }
    Ok(())
}
