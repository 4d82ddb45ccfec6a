//! Monochromatic-solution detection.
//!
//! A color class `S` contains a solution of `L(m, a)` iff some `t` in `S` has
//! `a*t` expressible as a sum of exactly `m-1` elements of `S`, repetition
//! allowed. [`SumsetTable`] answers that with one bitset per summand count.

use crate::bits::BitSet;
use crate::coloring::{Color, Coloring};
use crate::equation::RadoEquation;
use crate::error::{RadoError, Result};
use crate::template::{SolutionTemplate, Witness};

/// `layer(k)` holds every `s <= cap` that is a sum of exactly `k` class
/// elements (with repetition). `layer(0) = {0}`.
#[derive(Clone, Debug)]
pub struct SumsetTable {
    cap: usize,
    words: usize,
    layers: Vec<Vec<u64>>,
}

impl SumsetTable {
    /// Builds layers `0..=depth`. `class` must be ascending and free of zero.
    pub fn build(class: &[usize], depth: usize, cap: usize) -> Self {
        let mut table = Self::empty(cap);
        table.fill(class, depth);
        table
    }

    fn empty(cap: usize) -> Self {
        Self {
            cap,
            words: (cap + 1).div_ceil(64),
            layers: Vec::new(),
        }
    }

    fn reset(&mut self, cap: usize) {
        self.cap = cap;
        self.words = (cap + 1).div_ceil(64);
    }

    fn fill(&mut self, class: &[usize], depth: usize) {
        let words = self.words;
        let tail_mask = match (self.cap + 1) % 64 {
            0 => u64::MAX,
            r => (1u64 << r) - 1,
        };
        if self.layers.len() < depth + 1 {
            self.layers.resize_with(depth + 1, Vec::new);
        }
        for layer in &mut self.layers[..=depth] {
            layer.clear();
            layer.resize(words, 0);
        }
        self.layers[0][0] = 1;
        let min = class.first().copied().unwrap_or(usize::MAX);
        for k in 1..=depth {
            if min.saturating_mul(k) > self.cap {
                // every deeper layer is empty too
                break;
            }
            let (done, rest) = self.layers.split_at_mut(k);
            let prev = &done[k - 1];
            let cur = &mut rest[0];
            for &s in class {
                if s > self.cap {
                    break;
                }
                BitSet::or_shifted_into(cur, prev, s);
            }
            if let Some(last) = cur.last_mut() {
                *last &= tail_mask;
            }
        }
        self.layers.truncate(depth + 1);
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    #[inline]
    pub fn contains(&self, k: usize, s: usize) -> bool {
        s <= self.cap
            && self
                .layers
                .get(k)
                .is_some_and(|l| l[s / 64] & (1 << (s % 64)) != 0)
    }

    /// Members of layer `k`, ascending.
    pub fn layer(&self, k: usize) -> Vec<usize> {
        (0..=self.cap).filter(|&s| self.contains(k, s)).collect()
    }

    /// Recovers `k` summands of `sum`, taking the smallest usable element at
    /// each step. The result is nondecreasing.
    fn summands(&self, class: &[usize], k: usize, mut sum: usize) -> Option<Vec<usize>> {
        if !self.contains(k, sum) {
            return None;
        }
        let mut out = Vec::with_capacity(k);
        for level in (1..=k).rev() {
            let s = class
                .iter()
                .copied()
                .take_while(|&s| s <= sum)
                .find(|&s| self.contains(level - 1, sum - s))?;
            out.push(s);
            sum -= s;
        }
        Some(out)
    }
}

/// Reusable scratch space for repeated class checks.
#[derive(Debug)]
pub(crate) struct ClassChecker {
    table: SumsetTable,
}

impl ClassChecker {
    pub(crate) fn new() -> Self {
        Self {
            table: SumsetTable::empty(0),
        }
    }

    /// Smallest target `t` in `class` with a solution, with its left-side values.
    pub(crate) fn solution(
        &mut self,
        class: &[usize],
        eq: &RadoEquation,
    ) -> Option<(usize, Vec<usize>)> {
        let &max = class.last()?;
        let depth = usize::try_from(eq.left_terms()).ok()?;
        let a = usize::try_from(eq.a()).unwrap_or(usize::MAX);
        // targets above (m-1)*max can never be reached
        let cap = a.min(depth).saturating_mul(max);
        if class[0].saturating_mul(depth) > cap {
            return None;
        }
        self.table.reset(cap);
        self.table.fill(class, depth);
        let t = class.iter().copied().find(|&t| {
            t.checked_mul(a)
                .is_some_and(|s| self.table.contains(depth, s))
        })?;
        let left = self.table.summands(class, depth, t * a)?;
        Some((t, left))
    }

    pub(crate) fn has_solution(&mut self, class: &[usize], eq: &RadoEquation) -> bool {
        let Some(&max) = class.last() else {
            return false;
        };
        let Ok(depth) = usize::try_from(eq.left_terms()) else {
            return false;
        };
        let a = usize::try_from(eq.a()).unwrap_or(usize::MAX);
        let cap = a.min(depth).saturating_mul(max);
        if class[0].saturating_mul(depth) > cap {
            return false;
        }
        self.table.reset(cap);
        self.table.fill(class, depth);
        class.iter().any(|&t| {
            t.checked_mul(a)
                .is_some_and(|s| self.table.contains(depth, s))
        })
    }
}

fn witness_from(color: Color, target: usize, left: &[usize]) -> Witness {
    let left: Vec<u64> = left.iter().map(|&x| x as u64).collect();
    Witness {
        color,
        template: SolutionTemplate::from_values(&left, target as u64)
            .expect("class elements are positive"),
    }
}

/// A monochromatic solution of `eq` inside `col`, if one exists. Red is
/// searched before blue, then the smallest target, then the smallest summands.
pub fn find_mono_solution(col: &Coloring, eq: &RadoEquation) -> Option<Witness> {
    let mut checker = ClassChecker::new();
    [Color::Red, Color::Blue].into_iter().find_map(|color| {
        checker
            .solution(&col.class(color), eq)
            .map(|(t, left)| witness_from(color, t, &left))
    })
}

/// True iff `col` has no monochromatic solution of `eq`.
pub fn is_valid_coloring(col: &Coloring, eq: &RadoEquation) -> bool {
    let mut checker = ClassChecker::new();
    [Color::Red, Color::Blue]
        .into_iter()
        .all(|color| !checker.has_solution(&col.class(color), eq))
}

pub fn verify_witness(w: &Witness, col: &Coloring, eq: &RadoEquation) -> bool {
    w.template.evaluate(eq).unwrap_or(false)
        && w.template
            .distinct_values()
            .into_iter()
            .all(|d| col.color_of(d) == Some(w.color))
}

/// Ceiling on candidate (target, multiset) pairs the brute-force oracle accepts.
pub const NAIVE_LIMIT: u128 = 50_000_000;

fn multiset_count(kinds: u128, size: u128) -> u128 {
    // C(kinds + size - 1, size)
    if kinds == 0 {
        return u128::from(size == 0);
    }
    let mut acc: u128 = 1;
    for i in 1..=size {
        acc = acc.saturating_mul(kinds + i - 1) / i;
        if acc > NAIVE_LIMIT * 1000 {
            return u128::MAX;
        }
    }
    acc
}

/// Brute-force oracle: for each class (red first), each target `t` ascending,
/// enumerates every multiset of `m-1` class elements in lexicographic order.
/// Refuses instances above [`NAIVE_LIMIT`] candidates.
pub fn naive_find_mono_solution(col: &Coloring, eq: &RadoEquation) -> Result<Option<Witness>> {
    let k = eq.left_terms();
    for color in [Color::Red, Color::Blue] {
        let class: Vec<u64> = col.class(color).into_iter().map(|x| x as u64).collect();
        if class.is_empty() {
            continue;
        }
        let estimate =
            multiset_count(class.len() as u128, u128::from(k)).saturating_mul(class.len() as u128);
        if estimate > NAIVE_LIMIT {
            return Err(RadoError::InstanceTooLarge {
                estimate,
                limit: NAIVE_LIMIT,
            });
        }
        let k = k as usize;
        for &t in &class {
            let goal = u128::from(t) * u128::from(eq.a());
            let mut idx = vec![0usize; k];
            loop {
                let sum: u128 = idx.iter().map(|&i| u128::from(class[i])).sum();
                if sum == goal {
                    let left: Vec<u64> = idx.iter().map(|&i| class[i]).collect();
                    let template = SolutionTemplate::from_values(&left, t)?;
                    return Ok(Some(Witness { color, template }));
                }
                // next nondecreasing index sequence
                let Some(pos) = idx.iter().rposition(|&i| i + 1 < class.len()) else {
                    break;
                };
                let next = idx[pos] + 1;
                idx[pos..].iter_mut().for_each(|i| *i = next);
            }
        }
    }
    Ok(None)
}

/// Compares [`find_mono_solution`] with the brute-force oracle on every
/// coloring of `[n]` for `n <= max_n`. Returns the number of colorings checked
/// and those where the two disagree on whether a solution exists.
pub fn cross_check_all_colorings(
    eq: &RadoEquation,
    max_n: usize,
) -> Result<(usize, Vec<Coloring>)> {
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for n in 0..=max_n {
        for mask in 0u64..(1u64 << n) {
            let col = Coloring::new(n, (1..=n).filter(|x| mask >> (x - 1) & 1 == 1))?;
            let fast = find_mono_solution(&col, eq);
            let slow = naive_find_mono_solution(&col, eq)?;
            if fast.is_some() != slow.is_some()
                || fast.as_ref().is_some_and(|w| !verify_witness(w, &col, eq))
            {
                disagreements.push(col);
            }
            checked += 1;
        }
    }
    Ok((checked, disagreements))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(m: u64, a: u64) -> RadoEquation {
        RadoEquation::new(m, a).unwrap()
    }

    #[test]
    fn sumset_layers() {
        let t = SumsetTable::build(&[2, 5], 3, 20);
        assert_eq!(t.layer(0), vec![0]);
        assert_eq!(t.layer(1), vec![2, 5]);
        assert_eq!(t.layer(2), vec![4, 7, 10]);
        assert_eq!(t.layer(3), vec![6, 9, 12, 15]);
        assert_eq!(t.depth(), 3);
    }

    #[test]
    fn sumset_truncates_at_cap() {
        let t = SumsetTable::build(&[3, 4], 4, 10);
        assert_eq!(t.layer(2), vec![6, 7, 8]);
        assert_eq!(t.layer(3), vec![9, 10]);
        assert!(t.layer(4).is_empty());
        assert!(!t.contains(3, 11));
    }

    #[test]
    fn all_red_has_the_all_a_solution() {
        for (m, a) in [(3, 1), (5, 3), (8, 3), (6, 2), (4, 5)] {
            let e = eq(m, a);
            let n = a.max(m - 1) as usize;
            let col = Coloring::all(n, Color::Red);
            let w = find_mono_solution(&col, &e).expect("solution exists");
            assert_eq!(w.color, Color::Red);
            assert!(w.template.evaluate(&e).unwrap());
            assert!(verify_witness(&w, &col, &e));
        }
    }

    #[test]
    fn extremal_small_cases_are_solution_free() {
        let c6 = Coloring::new(4, [1, 4]).unwrap();
        assert_eq!(find_mono_solution(&c6, &eq(6, 3)), None);
        let c5 = Coloring::new(3, [1, 3]).unwrap();
        assert_eq!(find_mono_solution(&c5, &eq(5, 3)), None);
    }

    #[test]
    fn lower_bound_coloring_of_l83() {
        let col = Coloring::new(6, [1, 2]).unwrap();
        assert!(is_valid_coloring(&col, &eq(8, 3)));
        // with only 1 red, blue {2..6} has 2*6 + 3 = 3*5
        let col = Coloring::new(6, [1]).unwrap();
        let w = find_mono_solution(&col, &eq(8, 3)).unwrap();
        assert_eq!(w.color, Color::Blue);
        assert_eq!(w.template.to_string(), "[6->2; 1->3; 1->5]");
    }

    #[test]
    fn deterministic_witness() {
        let col = Coloring::new(2, [1, 2]).unwrap();
        let w = find_mono_solution(&col, &eq(3, 3)).unwrap();
        assert_eq!(w.template.to_string(), "[1->1; 1->2; 1->1]");
        let n = naive_find_mono_solution(&col, &eq(3, 3)).unwrap().unwrap();
        assert_eq!(n, w);
    }

    #[test]
    fn all_ones() {
        let col = Coloring::new(1, [1]).unwrap();
        let w = naive_find_mono_solution(&col, &eq(4, 3)).unwrap().unwrap();
        assert_eq!(w.template.to_string(), "[4->1]");
        assert_eq!(find_mono_solution(&col, &eq(4, 3)), Some(w));
    }

    #[test]
    fn empty_coloring() {
        let e = eq(5, 3);
        assert!(is_valid_coloring(&Coloring::empty(), &e));
        assert_eq!(find_mono_solution(&Coloring::empty(), &e), None);
        assert_eq!(
            naive_find_mono_solution(&Coloring::empty(), &e).unwrap(),
            None
        );
    }

    #[test]
    fn verify_rejects_wrong_color_and_domain() {
        let e = eq(8, 3);
        let w = Witness {
            color: Color::Red,
            template: SolutionTemplate::new([(7, 3), (1, 7)]).unwrap(),
        };
        assert!(verify_witness(&w, &Coloring::all(14, Color::Red), &e));
        let mixed = Coloring::new(7, [3]).unwrap();
        assert!(!verify_witness(&w, &mixed, &e));
        assert!(!verify_witness(&w, &Coloring::all(6, Color::Red), &e));
        let false_eq = Witness {
            color: Color::Red,
            template: SolutionTemplate::new([(7, 2), (1, 5)]).unwrap(),
        };
        assert!(!verify_witness(
            &false_eq,
            &Coloring::all(6, Color::Red),
            &e
        ));
    }

    #[test]
    fn naive_refuses_large_instances() {
        let col = Coloring::all(40, Color::Red);
        assert!(matches!(
            naive_find_mono_solution(&col, &eq(12, 3)),
            Err(RadoError::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn m_equals_two() {
        // x1 = 3 x2: {1, 3} is a solution, {1, 2} is not
        assert!(find_mono_solution(&Coloring::all(3, Color::Red), &eq(2, 3)).is_some());
        assert!(is_valid_coloring(
            &Coloring::new(3, [1, 2]).unwrap(),
            &eq(2, 3)
        ));
    }
}
