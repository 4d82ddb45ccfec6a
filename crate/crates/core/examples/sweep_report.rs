//! Runs the search over a range of m for one a and prints the JSON report.
//!
//!     cargo run --release --example sweep_report -- 3 3 16

use rado::certificate::{to_json, ReportRow};
use rado::{sweep, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let (a, from, to) = match args.as_slice() {
        [a, f, t, ..] => (*a, *f, *t),
        _ => (3, 3, 16),
    };
    let entries = sweep(a, from..=to, &SearchConfig::new(40))?;
    let rows: Vec<ReportRow> = entries.iter().map(ReportRow::from).collect();
    print!("{}", to_json(&rows));
    let disagreements = rows.iter().filter(|r| r.agree == Some(false)).count();
    eprintln!("{} rows, {disagreements} disagreements", rows.len());
    Ok(())
}
