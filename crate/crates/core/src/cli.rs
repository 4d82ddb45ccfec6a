//! Command-line front end. Exit codes: 0 success / VALID, 1 failure or
//! witness found, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::certificate::{to_json, CertificateFile, ColoringInput, ReportRow};
use crate::checker::{cross_check_all_colorings, find_mono_solution, is_valid_coloring};
use crate::construction::{proposition1_coloring, theorem2_small_coloring};
use crate::equation::RadoEquation;
use crate::formula::{ceiling_formula, closed_form, decompose, known_rado_number};
use crate::search::{exact_rado_number_with, sweep, SearchConfig, SearchStatus, DEFAULT_N_MAX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "rado",
    version,
    about = "2-color Rado numbers of x1 + ... + x(m-1) = a*x(m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print C(m,a), optionally with its closed-form breakdown
    Formula {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        breakdown: bool,
    },
    /// Build a solution-free lower-bound coloring
    Construct {
        #[arg(long, requires = "a", conflicts_with = "small_case")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        a: Option<u64>,
        /// Tabulated extremal coloring of L(M,3), M in {5, 6}
        #[arg(long, value_name = "M")]
        small_case: Option<u64>,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring (or certificate) file for monochromatic solutions
    Check {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, requires = "a")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        a: Option<u64>,
    },
    /// Compute the exact Rado number by exhaustive search
    Exact {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        a: u64,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the extremal coloring as a certificate file
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Run the exact search over a range of m and compare with known values
    Sweep {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        m_from: u64,
        #[arg(long)]
        m_to: u64,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Reproduce the a = 3 small cases and cross-check the checker against brute force
    Selftest,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, env = "RADO_THREADS", default_value_t = 1)]
    threads: usize,
    /// Per-search time limit in seconds
    #[arg(long)]
    time_limit: Option<f64>,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let mut cfg = SearchConfig::new(self.n_max).threads(self.threads);
        if let Some(secs) = self.time_limit {
            cfg = cfg.time_limit(Duration::from_secs_f64(secs.max(0.0)));
        }
        cfg
    }
}

struct Usage(String);

type CmdResult = Result<i32, Usage>;

fn equation(m: u64, a: u64) -> Result<RadoEquation, Usage> {
    RadoEquation::new(m, a).map_err(|e| Usage(e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Usage> {
    std::fs::write(path, contents)
        .map_err(|e| Usage(format!("cannot write {}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Formula { m, a, breakdown } => cmd_formula(m, a, breakdown, out),
        Command::Construct {
            m,
            a,
            small_case,
            verify,
            out: path,
        } => cmd_construct(m.zip(a), small_case, verify, path.as_deref(), out),
        Command::Check { file, m, a } => cmd_check(&file, m.zip(a), out),
        Command::Exact { m, a, search, cert } => cmd_exact(m, a, &search, cert.as_deref(), out),
        Command::Sweep {
            a,
            m_from,
            m_to,
            search,
            report,
        } => cmd_sweep(a, m_from, m_to, &search, report.as_deref(), out),
        Command::Selftest => Ok(cmd_selftest(out)),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn cmd_formula(m: u64, a: u64, breakdown: bool, out: &mut dyn Write) -> CmdResult {
    let eq = equation(m, a)?;
    let c = ceiling_formula(&eq).map_err(|e| Usage(e.to_string()))?;
    let _ = writeln!(out, "C({m},{a}) = {c}");
    if breakdown {
        match decompose(&eq) {
            Ok(b) => {
                let closed = closed_form(&eq).map_err(|e| Usage(e.to_string()))?;
                let _ = writeln!(out, "u={} v={} c={} t={}", b.u, b.v, b.c, b.t);
                let _ = writeln!(out, "{} -> {closed}", b.case());
            }
            Err(e) => {
                let _ = writeln!(out, "breakdown: {e}");
            }
        }
    }
    if let Some(k) = known_rado_number(&eq) {
        let _ = writeln!(out, "known Rado number: {} ({:?})", k.value, k.source);
    }
    Ok(EXIT_OK)
}

fn cmd_construct(
    params: Option<(u64, u64)>,
    small_case: Option<u64>,
    verify: bool,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let (eq, coloring) = match (params, small_case) {
        (Some((m, a)), None) => {
            let eq = equation(m, a)?;
            (
                eq,
                proposition1_coloring(&eq).map_err(|e| Usage(e.to_string()))?,
            )
        }
        (None, Some(m)) => (
            equation(m, 3)?,
            theorem2_small_coloring(m).map_err(|e| Usage(e.to_string()))?,
        ),
        _ => return Err(Usage("give either --m and --a, or --small-case".into())),
    };
    let _ = writeln!(out, "{eq}: {coloring}");
    let mut code = EXIT_OK;
    if verify {
        if is_valid_coloring(&coloring, &eq) {
            let _ = writeln!(out, "VALID");
        } else {
            let _ = writeln!(out, "INVALID");
            code = EXIT_FAIL;
        }
    }
    if let Some(path) = path {
        write_file(path, &to_json(&CertificateFile::valid(eq, coloring)))?;
    }
    Ok(code)
}

fn cmd_check(file: &Path, params: Option<(u64, u64)>, out: &mut dyn Write) -> CmdResult {
    let input = ColoringInput::read(file).map_err(Usage)?;
    let eq = match (params, input.equation()) {
        (Some((m, a)), _) => equation(m, a)?,
        (None, Some(eq)) => eq,
        (None, None) => return Err(Usage("--m and --a are required for a bare coloring".into())),
    };
    let coloring = input.coloring().clone();
    match find_mono_solution(&coloring, &eq) {
        None => {
            let _ = writeln!(out, "VALID");
            Ok(EXIT_OK)
        }
        Some(w) => {
            let _ = write!(
                out,
                "{}",
                to_json(&CertificateFile::witness(eq, coloring, w))
            );
            Ok(EXIT_FAIL)
        }
    }
}

fn cmd_exact(
    m: u64,
    a: u64,
    search: &SearchArgs,
    cert: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let eq = equation(m, a)?;
    if search.n_max == 0 {
        return Err(Usage("--n-max must be positive".into()));
    }
    let res = exact_rado_number_with(&eq, &search.config());
    match (res.status, res.rado_number) {
        (SearchStatus::Exact, Some(r)) => {
            let _ = writeln!(out, "{eq}: Rado number = {r}");
        }
        _ if res.stats.timed_out => {
            let _ = writeln!(
                out,
                "{eq}: cutoff (time limit), valid coloring of [{}] found",
                res.deepest_valid
            );
        }
        _ => {
            let _ = writeln!(
                out,
                "{eq}: cutoff, valid coloring of [{}] found; Rado number > {} if it exists",
                res.deepest_valid, res.deepest_valid
            );
        }
    }
    let _ = writeln!(out, "certificate {}", res.certificate);
    let _ = writeln!(
        out,
        "nodes={} checks={} millis={}",
        res.stats.nodes, res.stats.checks, res.stats.millis
    );
    if let Some(path) = cert {
        write_file(path, &to_json(&CertificateFile::valid(eq, res.certificate)))?;
    }
    Ok(EXIT_OK)
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn cmd_sweep(
    a: u64,
    m_from: u64,
    m_to: u64,
    search: &SearchArgs,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    if m_from > m_to {
        return Err(Usage("--m-from must not exceed --m-to".into()));
    }
    let entries = sweep(a, m_from..=m_to, &search.config()).map_err(|e| Usage(e.to_string()))?;
    let _ = writeln!(
        out,
        "{:>4} {:>4} {:>8} {:>8} {:>8} {:>6} {:>10} {:>8}",
        "m", "a", "exact", "formula", "known", "agree", "nodes", "millis"
    );
    let rows: Vec<ReportRow> = entries.iter().map(ReportRow::from).collect();
    for r in &rows {
        let _ = writeln!(
            out,
            "{:>4} {:>4} {:>8} {:>8} {:>8} {:>6} {:>10} {:>8}",
            r.m,
            r.a,
            fmt_opt(r.exact),
            r.formula,
            fmt_opt(r.known),
            fmt_opt(r.agree),
            r.nodes,
            r.millis
        );
    }
    if let Some(path) = report {
        write_file(path, &to_json(&rows))?;
    }
    Ok(if rows.iter().any(|r| r.agree == Some(false)) {
        EXIT_FAIL
    } else {
        EXIT_OK
    })
}

/// Equations used by the brute-force cross-check in `selftest`.
pub const ORACLE_EQUATIONS: [(u64, u64); 5] = [(3, 1), (3, 3), (4, 3), (5, 3), (5, 2)];

fn cmd_selftest(out: &mut dyn Write) -> i32 {
    let mut failed = false;
    let mut report = |ok: bool, label: String| {
        failed |= !ok;
        let _ = writeln!(out, "{} {label}", if ok { "PASS" } else { "FAIL" });
    };
    let cfg = SearchConfig::new(12);
    match sweep(3, 3..=10, &cfg) {
        Ok(entries) => {
            for e in entries {
                report(
                    e.agree == Some(true),
                    format!(
                        "{}: search {} vs known {}",
                        e.equation,
                        fmt_opt(e.outcome.rado_number),
                        fmt_opt(e.known.map(|k| k.value))
                    ),
                );
            }
        }
        Err(e) => report(false, format!("sweep a=3: {e}")),
    }
    for (m, a) in ORACLE_EQUATIONS {
        let eq = RadoEquation::new(m, a).expect("valid");
        match cross_check_all_colorings(&eq, 7) {
            Ok((n, bad)) => report(
                bad.is_empty(),
                format!(
                    "{eq}: checker agrees with brute force on {n} colorings ({} mismatches)",
                    bad.len()
                ),
            ),
            Err(e) => report(false, format!("{eq}: {e}")),
        }
    }
    if failed {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}
