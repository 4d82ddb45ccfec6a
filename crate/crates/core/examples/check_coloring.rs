//! Looks for monochromatic solutions in a few colorings and prints witnesses.
//!
//!     cargo run --example check_coloring

use rado::{find_mono_solution, naive_find_mono_solution, verify_witness, Coloring, RadoEquation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (6, 3, Coloring::new(4, [1, 4])?),
        (5, 3, Coloring::new(3, [1, 3])?),
        (8, 3, Coloring::new(6, [1, 2])?),
        (8, 3, Coloring::new(6, [1])?),
        (3, 3, Coloring::new(2, [1, 2])?),
        (3, 1, Coloring::new(5, [1, 4, 5])?),
    ];
    for (m, a, col) in cases {
        let eq = RadoEquation::new(m, a)?;
        match find_mono_solution(&col, &eq) {
            None => println!("{eq} {col}: no monochromatic solution"),
            Some(w) => {
                let brute = naive_find_mono_solution(&col, &eq)?;
                println!(
                    "{eq} {col}: {} solution {} (verified: {}, brute force agrees: {})",
                    w.color,
                    w.template,
                    verify_witness(&w, &col, &eq),
                    brute.is_some()
                );
            }
        }
    }
    Ok(())
}
