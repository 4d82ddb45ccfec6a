//! Exact 2-color Rado numbers for `x_1 + ... + x_{m-1} = a * x_m`.
//!
//! * [`formula`]: the nested-ceiling value `C(m, a)`, its closed forms, and
//!   the table of known exact values.
//! * [`checker`]: monochromatic-solution detection with a sumset DP, plus a
//!   brute-force oracle.
//! * [`construction`]: solution-free lower-bound colorings.
//! * [`search`]: exhaustive DFS that computes exact Rado numbers and emits
//!   extremal colorings as certificates.
//! * [`cli`]: the `rado` command-line tool.

mod bits;
pub mod certificate;
pub mod checker;
pub mod cli;
pub mod coloring;
pub mod construction;
pub mod equation;
pub mod error;
pub mod formula;
pub mod search;
pub mod template;

pub use bits::BitSet;
pub use certificate::{CertificateFile, Claim};
pub use checker::{
    find_mono_solution, is_valid_coloring, naive_find_mono_solution, verify_witness, SumsetTable,
};
pub use coloring::{Color, Coloring};
pub use construction::{proposition1_coloring, theorem2_small_coloring};
pub use equation::RadoEquation;
pub use error::{RadoError, Result};
pub use formula::{
    ceiling_formula, closed_form, decompose, known_rado_number, lemma11_holds, lemma1_holds,
    ClosedFormCase, FormulaBreakdown, KnownNumber, KnownSource,
};
pub use search::{
    exact_rado_number, exact_rado_number_with, prefix_is_solution_free, sweep, SearchConfig,
    SearchOutcome, SearchStats, SearchStatus, SweepEntry,
};
pub use template::{SolutionTemplate, Witness};
