//! Exhaustive depth-first search for exact 2-color Rado numbers.
//!
//! Elements are colored in the order `1, 2, 3, ...`, red branch first, with
//! `1` pinned red. A node at depth `k` is kept only if its coloring of `[k]` is
//! solution-free, so the deepest node reached is the largest `n` with a valid
//! coloring, and the Rado number is one more than that (when the tree is
//! exhausted below `n_max`).
//!
//! The certificate is the lexicographically smallest deepest coloring, reading
//! colors in element order with red before blue. Sequential DFS finds it
//! first; the parallel driver merges per-subtree results with the same rule,
//! so the outcome does not depend on the worker count.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checker::ClassChecker;
use crate::coloring::{Color, Coloring};
use crate::equation::RadoEquation;
use crate::error::{RadoError, Result};
use crate::formula::{ceiling_formula, known_rado_number, KnownNumber};

pub const DEFAULT_N_MAX: usize = 24;

/// Sweeps refuse `n_max` above this; the tree has up to `2^(n_max-1)` nodes.
pub const SWEEP_N_MAX_LIMIT: usize = 40;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n_max: usize,
    /// Worker threads; `1` runs the plain sequential DFS.
    pub threads: usize,
    /// Prefix length at which the tree is split into parallel tasks.
    pub split_depth: usize,
    pub time_limit: Option<Duration>,
}

impl SearchConfig {
    pub fn new(n_max: usize) -> Self {
        Self {
            n_max,
            threads: 1,
            split_depth: 10,
            time_limit: None,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self::new(DEFAULT_N_MAX)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    Cutoff,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub checks: u64,
    pub millis: u64,
    /// Set when the time limit stopped the search; the outcome is then a cutoff
    /// whose `deepest_valid` may be below `n_max`.
    pub timed_out: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub rado_number: Option<u64>,
    pub deepest_valid: usize,
    pub certificate: Coloring,
    pub stats: SearchStats,
}

/// Search result for one subtree.
#[derive(Debug, Default)]
struct Partial {
    depth: usize,
    best: Vec<Color>,
    nodes: u64,
    checks: u64,
    reached_cap: bool,
}

impl Partial {
    fn absorb(&mut self, other: Partial) {
        self.nodes += other.nodes;
        self.checks += other.checks;
        self.reached_cap |= other.reached_cap;
        if other.depth > self.depth || (other.depth == self.depth && other.best < self.best) {
            self.depth = other.depth;
            self.best = other.best;
        }
    }
}

struct Dfs<'a> {
    eq: &'a RadoEquation,
    n_max: usize,
    /// Nodes at this depth are recorded as frontier roots instead of expanded.
    frontier_depth: Option<usize>,
    frontier: Vec<Vec<Color>>,
    classes: [Vec<usize>; 2],
    colors: Vec<Color>,
    checker: ClassChecker,
    out: Partial,
    stop: &'a dyn Fn() -> bool,
    stopped: bool,
}

impl<'a> Dfs<'a> {
    fn new(eq: &'a RadoEquation, n_max: usize, stop: &'a dyn Fn() -> bool) -> Self {
        Self {
            eq,
            n_max,
            frontier_depth: None,
            frontier: Vec::new(),
            classes: [Vec::new(), Vec::new()],
            colors: Vec::new(),
            checker: ClassChecker::new(),
            out: Partial::default(),
            stop,
            stopped: false,
        }
    }

    fn class_index(color: Color) -> usize {
        match color {
            Color::Red => 0,
            Color::Blue => 1,
        }
    }

    /// Replays a prefix already known to be solution-free.
    fn seed(&mut self, prefix: &[Color]) {
        for (i, &c) in prefix.iter().enumerate() {
            self.classes[Self::class_index(c)].push(i + 1);
            self.colors.push(c);
        }
    }

    /// Returns false once the search should unwind.
    fn visit(&mut self) -> bool {
        let k = self.colors.len();
        self.out.nodes += 1;
        if k > self.out.depth || self.out.nodes == 1 {
            self.out.depth = k;
            self.out.best.clone_from(&self.colors);
        }
        if k >= self.n_max {
            self.out.reached_cap = true;
            return false;
        }
        if self.frontier_depth == Some(k) {
            self.frontier.push(self.colors.clone());
            return true;
        }
        if self.out.nodes.is_multiple_of(1024) && (self.stop)() {
            self.stopped = true;
            return false;
        }
        let next = k + 1;
        let branches: &[Color] = if k == 0 {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        };
        for &color in branches {
            let idx = Self::class_index(color);
            self.classes[idx].push(next);
            self.out.checks += 1;
            let ok = !self.checker.has_solution(&self.classes[idx], self.eq);
            if ok {
                self.colors.push(color);
                let go_on = self.visit();
                self.colors.pop();
                if !go_on {
                    self.classes[idx].pop();
                    return false;
                }
            }
            self.classes[idx].pop();
        }
        true
    }
}

/// Checks a coloring of `[k]` whose element `last_changed` was just colored.
/// That element's class is checked first; the other class is checked after.
pub fn prefix_is_solution_free(col: &Coloring, eq: &RadoEquation, last_changed: usize) -> bool {
    if col.is_empty() {
        return true;
    }
    let first = col.color_of(last_changed as u64).unwrap_or(Color::Red);
    let mut checker = ClassChecker::new();
    [first, first.other()]
        .into_iter()
        .all(|c| !checker.has_solution(&col.class(c), eq))
}

/// Exact Rado number of `eq` if it is at most `n_max`, single-threaded.
pub fn exact_rado_number(eq: &RadoEquation, n_max: usize) -> SearchOutcome {
    exact_rado_number_with(eq, &SearchConfig::new(n_max))
}

pub fn exact_rado_number_with(eq: &RadoEquation, config: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    let deadline = config.time_limit.map(|d| start + d);
    let timed_out = AtomicBool::new(false);
    let past_deadline = || {
        let late = deadline.is_some_and(|d| Instant::now() >= d);
        if late {
            timed_out.store(true, Ordering::Relaxed);
        }
        late
    };

    let n_max = config.n_max.max(1);
    let parallel = config.threads > 1 && config.split_depth + 1 < n_max;
    let result = if parallel {
        run_parallel(eq, n_max, config, &past_deadline)
    } else {
        let mut dfs = Dfs::new(eq, n_max, &past_deadline);
        dfs.visit();
        dfs.out
    };

    let timed_out = timed_out.into_inner();
    let exact = !result.reached_cap && !timed_out;
    SearchOutcome {
        status: if exact {
            SearchStatus::Exact
        } else {
            SearchStatus::Cutoff
        },
        rado_number: exact.then_some(result.depth as u64 + 1),
        deepest_valid: result.depth,
        certificate: Coloring::from_colors(&result.best),
        stats: SearchStats {
            nodes: result.nodes,
            checks: result.checks,
            millis: start.elapsed().as_millis() as u64,
            timed_out,
        },
    }
}

fn run_parallel(
    eq: &RadoEquation,
    n_max: usize,
    config: &SearchConfig,
    past_deadline: &(dyn Fn() -> bool + Sync),
) -> Partial {
    let never = || false;
    let mut shallow = Dfs::new(eq, n_max, &never);
    shallow.frontier_depth = Some(config.split_depth);
    shallow.visit();
    let frontier = std::mem::take(&mut shallow.frontier);
    let mut merged = shallow.out;

    // Lowest frontier index whose subtree reached n_max. Higher-indexed
    // subtrees cannot hold a smaller certificate and may stop early.
    let first_capped = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .expect("thread pool");
    let partials: Vec<Partial> = pool.install(|| {
        frontier
            .par_iter()
            .enumerate()
            .map(|(i, prefix)| {
                let stop = || first_capped.load(Ordering::Relaxed) < i || past_deadline();
                if stop() {
                    return Partial::default();
                }
                let mut dfs = Dfs::new(eq, n_max, &stop);
                dfs.seed(prefix);
                dfs.visit();
                if dfs.out.reached_cap {
                    first_capped.fetch_min(i, Ordering::Relaxed);
                }
                // the frontier root itself was already counted by the shallow pass
                dfs.out.nodes -= 1;
                dfs.out
            })
            .collect()
    });
    for p in partials {
        merged.absorb(p);
    }
    merged
}

/// One row of a sweep over `m` for fixed `a`.
#[derive(Clone, Debug)]
pub struct SweepEntry {
    pub equation: RadoEquation,
    pub outcome: SearchOutcome,
    pub formula: u64,
    pub known: Option<KnownNumber>,
    /// `None` when no published value covers the equation. For a cutoff, a
    /// known value above `n_max` counts as agreement.
    pub agree: Option<bool>,
}

/// Runs the exact search for every `m` in `m_range` and compares with the
/// known values. Entries that hit the time limit are reported as cutoffs.
pub fn sweep(
    a: u64,
    m_range: RangeInclusive<u64>,
    config: &SearchConfig,
) -> Result<Vec<SweepEntry>> {
    if config.n_max > SWEEP_N_MAX_LIMIT {
        return Err(RadoError::Unsupported(format!(
            "n_max {} exceeds the sweep limit {SWEEP_N_MAX_LIMIT}",
            config.n_max
        )));
    }
    m_range
        .map(|m| {
            let equation = RadoEquation::new(m, a)?;
            let outcome = exact_rado_number_with(&equation, config);
            let known = known_rado_number(&equation);
            let agree = known.map(|k| match outcome.rado_number {
                Some(r) => r == k.value,
                None => !outcome.stats.timed_out && k.value > config.n_max as u64,
            });
            Ok(SweepEntry {
                equation,
                formula: ceiling_formula(&equation)?,
                outcome,
                known,
                agree,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::is_valid_coloring;

    fn eq(m: u64, a: u64) -> RadoEquation {
        RadoEquation::new(m, a).unwrap()
    }

    #[test]
    fn schur_number() {
        let out = exact_rado_number(&eq(3, 1), 10);
        assert_eq!(out.status, SearchStatus::Exact);
        assert_eq!(out.rado_number, Some(5));
        assert_eq!(out.deepest_valid, 4);
        assert_eq!(out.certificate, Coloring::new(4, [1, 4]).unwrap());
    }

    #[test]
    fn all_ones_gives_one() {
        let out = exact_rado_number(&eq(4, 3), 8);
        assert_eq!(out.rado_number, Some(1));
        assert!(out.certificate.is_empty());
        let out = exact_rado_number(&eq(2, 1), 8);
        assert_eq!(out.rado_number, Some(1));
    }

    #[test]
    fn m2_is_cut_off() {
        let out = exact_rado_number(&eq(2, 3), 20);
        assert_eq!(out.status, SearchStatus::Cutoff);
        assert_eq!(out.rado_number, None);
        assert_eq!(out.deepest_valid, 20);
        assert_eq!(out.certificate.n(), 20);
        assert!(is_valid_coloring(&out.certificate, &eq(2, 3)));
    }

    #[test]
    fn small_a3_values() {
        for (m, r) in [(3, 9), (5, 4), (6, 5), (7, 4)] {
            let out = exact_rado_number(&eq(m, 3), 16);
            assert_eq!(out.rado_number, Some(r), "m={m}");
            assert!(is_valid_coloring(&out.certificate, &eq(m, 3)));
        }
    }

    #[test]
    fn exact_at_n_max_boundary() {
        // Rado number 5 with n_max 5: no valid coloring of [5] exists.
        let out = exact_rado_number(&eq(3, 1), 5);
        assert_eq!(out.rado_number, Some(5));
        let out = exact_rado_number(&eq(3, 1), 4);
        assert_eq!(out.status, SearchStatus::Cutoff);
        assert_eq!(out.deepest_valid, 4);
    }

    #[test]
    fn parallel_matches_sequential() {
        for (m, a, n_max) in [(3, 3, 12), (6, 3, 12), (2, 3, 14), (4, 1, 14)] {
            let e = eq(m, a);
            let seq = exact_rado_number(&e, n_max);
            let mut cfg = SearchConfig::new(n_max).threads(4);
            cfg.split_depth = 3;
            let par = exact_rado_number_with(&e, &cfg);
            assert_eq!(par.status, seq.status, "{e}");
            assert_eq!(par.rado_number, seq.rado_number, "{e}");
            assert_eq!(par.deepest_valid, seq.deepest_valid, "{e}");
            assert_eq!(par.certificate, seq.certificate, "{e}");
        }
    }

    #[test]
    fn prefix_checks() {
        let e = eq(8, 3);
        assert!(prefix_is_solution_free(&Coloring::empty(), &e, 0));
        let red = Coloring::all(7, Color::Red);
        assert!(!prefix_is_solution_free(&red, &e, 7));
        let col = Coloring::new(6, [1, 2]).unwrap();
        for k in 0..=6 {
            assert!(prefix_is_solution_free(&col.prefix(k), &e, k));
        }
    }

    #[test]
    fn zero_time_limit_is_cutoff() {
        let cfg = SearchConfig::new(20).time_limit(Duration::ZERO);
        let out = exact_rado_number_with(&eq(5, 1), &cfg);
        // the limit is polled every 1024 nodes, so tiny trees can still finish
        if out.stats.timed_out {
            assert_eq!(out.status, SearchStatus::Cutoff);
            assert!(is_valid_coloring(&out.certificate, &eq(5, 1)));
        }
    }

    #[test]
    fn sweep_guard() {
        let cfg = SearchConfig::new(SWEEP_N_MAX_LIMIT + 1);
        assert!(sweep(3, 3..=4, &cfg).is_err());
    }
}
