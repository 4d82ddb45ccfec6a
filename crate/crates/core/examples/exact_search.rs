//! Exact Rado number by exhaustive search, with its extremal certificate.
//!
//!     cargo run --release --example exact_search -- 14 3 4
//!
//! Arguments: m, a, worker threads.

use rado::certificate::{to_json, CertificateFile};
use rado::{exact_rado_number_with, known_rado_number, RadoEquation, SearchConfig, SearchStatus};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let (m, a, threads) = match args.as_slice() {
        [m, a, t, ..] => (*m, *a, *t as usize),
        [m, a] => (*m, *a, 1),
        _ => (3, 3, 1),
    };
    let eq = RadoEquation::new(m, a)?;
    let out = exact_rado_number_with(&eq, &SearchConfig::new(64).threads(threads));
    match out.status {
        SearchStatus::Exact => println!("{eq}: Rado number {}", out.rado_number.unwrap()),
        SearchStatus::Cutoff => println!("{eq}: no answer up to {}", out.deepest_valid),
    }
    if let Some(k) = known_rado_number(&eq) {
        println!("known value {} ({:?})", k.value, k.source);
    }
    println!(
        "{} nodes, {} checks, {} ms",
        out.stats.nodes, out.stats.checks, out.stats.millis
    );
    print!("{}", to_json(&CertificateFile::valid(eq, out.certificate)));
    Ok(())
}
