//! Grouped solution notation `[n1->d1; n2->d2; ...; nk->dk]`: the first `n1`
//! variable slots take value `d1`, the next `n2` take `d2`, and so on. The last
//! slot is `x_m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Color;
use crate::equation::RadoEquation;
use crate::error::{RadoError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTemplate", into = "RawTemplate")]
pub struct SolutionTemplate {
    groups: Vec<(u64, u64)>,
}

impl SolutionTemplate {
    /// Groups are `(count, value)`. Values must be positive; zero counts are
    /// allowed and contribute no slots.
    pub fn new(groups: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let groups: Vec<_> = groups.into_iter().collect();
        if let Some(&(_, d)) = groups.iter().find(|(_, d)| *d == 0) {
            return Err(RadoError::MalformedTemplate(format!(
                "value {d} is not a positive integer"
            )));
        }
        if groups.iter().all(|&(n, _)| n == 0) {
            return Err(RadoError::MalformedTemplate("template has no slots".into()));
        }
        Ok(Self { groups })
    }

    /// Groups runs of equal values from the expanded left side followed by the target.
    pub fn from_values(left: &[u64], target: u64) -> Result<Self> {
        let mut groups: Vec<(u64, u64)> = Vec::new();
        for &v in left.iter().chain(std::iter::once(&target)) {
            match groups.last_mut() {
                Some((n, d)) if *d == v => *n += 1,
                _ => groups.push((1, v)),
            }
        }
        Self::new(groups)
    }

    pub fn groups(&self) -> &[(u64, u64)] {
        &self.groups
    }

    /// Total number of variable slots.
    pub fn slots(&self) -> Result<u64> {
        self.groups
            .iter()
            .try_fold(0u64, |acc, &(n, _)| acc.checked_add(n))
            .ok_or(RadoError::Overflow("template slot count"))
    }

    fn check_slots(&self, m: u64) -> Result<()> {
        let got = self.slots()?;
        if got != m {
            return Err(RadoError::SlotMismatch { expected: m, got });
        }
        Ok(())
    }

    /// Value placed in the final slot `x_m`.
    fn target(&self) -> u64 {
        self.groups
            .iter()
            .rev()
            .find(|(n, _)| *n > 0)
            .map(|&(_, d)| d)
            .expect("nonempty template")
    }

    /// Whether substituting the template into `eq` gives a true equation.
    pub fn evaluate(&self, eq: &RadoEquation) -> Result<bool> {
        self.check_slots(eq.m())?;
        let total = self
            .groups
            .iter()
            .try_fold(0u64, |acc, &(n, d)| {
                n.checked_mul(d).and_then(|p| acc.checked_add(p))
            })
            .ok_or(RadoError::Overflow("template left side"))?;
        let target = self.target();
        let left = total - target;
        let right = eq
            .a()
            .checked_mul(target)
            .ok_or(RadoError::Overflow("template right side"))?;
        Ok(left == right)
    }

    /// Splits the `m` slots into the `m - 1` left-side values (in slot order)
    /// and the value of `x_m`.
    pub fn values(&self, m: u64) -> Result<(Vec<u64>, u64)> {
        self.check_slots(m)?;
        let mut left = Vec::with_capacity(usize::try_from(m - 1).unwrap_or(0));
        for &(n, d) in &self.groups {
            left.extend(std::iter::repeat_n(d, n as usize));
        }
        let target = left.pop().expect("m >= 1 slots");
        Ok((left, target))
    }

    /// Distinct values used anywhere in the template.
    pub fn distinct_values(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .groups
            .iter()
            .filter(|(n, _)| *n > 0)
            .map(|&(_, d)| d)
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Multiplies every value by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        if factor == 0 {
            return Err(RadoError::MalformedTemplate(
                "scale factor must be positive".into(),
            ));
        }
        let groups = self
            .groups
            .iter()
            .map(|&(n, d)| d.checked_mul(factor).map(|d| (n, d)))
            .collect::<Option<Vec<_>>>()
            .ok_or(RadoError::Overflow("scaled template"))?;
        Self::new(groups)
    }

    /// Splits group `index` into two adjacent groups of the same value.
    pub fn split_group(&self, index: usize, first: u64) -> Result<Self> {
        let &(n, d) = self
            .groups
            .get(index)
            .ok_or_else(|| RadoError::MalformedTemplate(format!("no group {index}")))?;
        if first > n {
            return Err(RadoError::MalformedTemplate(format!(
                "cannot split {first} slots off a group of {n}"
            )));
        }
        let mut groups = self.groups.clone();
        groups.splice(index..=index, [(first, d), (n - first, d)]);
        Self::new(groups)
    }
}

impl fmt::Display for SolutionTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (n, d)) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{n}->{d}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[3->2; 1->4]`; `→` is accepted in place of `->`.
impl FromStr for SolutionTemplate {
    type Err = RadoError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || RadoError::MalformedTemplate(format!("cannot parse {s:?}"));
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let groups = body
            .split(';')
            .map(|part| {
                let part = part.replace('→', "->");
                let (n, d) = part.split_once("->").ok_or_else(bad)?;
                let n = n.trim().parse::<u64>().map_err(|_| bad())?;
                let d = d.trim().parse::<u64>().map_err(|_| bad())?;
                Ok((n, d))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(groups)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTemplate {
    groups: Vec<(u64, u64)>,
}

impl TryFrom<RawTemplate> for SolutionTemplate {
    type Error = RadoError;

    fn try_from(raw: RawTemplate) -> Result<Self> {
        SolutionTemplate::new(raw.groups)
    }
}

impl From<SolutionTemplate> for RawTemplate {
    fn from(t: SolutionTemplate) -> Self {
        RawTemplate { groups: t.groups }
    }
}

/// A monochromatic solution: a template whose values all carry `color`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub color: Color,
    pub template: SolutionTemplate,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(m: u64, a: u64) -> RadoEquation {
        RadoEquation::new(m, a).unwrap()
    }

    fn t(s: &str) -> SolutionTemplate {
        s.parse().unwrap()
    }

    #[test]
    fn all_a_solution() {
        for (m, a) in [(2, 1), (3, 3), (8, 3), (20, 7), (100, 1)] {
            let tpl = SolutionTemplate::new([(m - 1, a), (1, m - 1)]).unwrap();
            assert!(tpl.evaluate(&eq(m, a)).unwrap(), "m={m} a={a}");
        }
    }

    #[test]
    fn two_slot_target_group() {
        // [m-2 -> a-1; 2 -> m-2]
        for (m, a) in [(4, 2), (8, 3), (17, 3), (30, 5)] {
            let tpl = SolutionTemplate::new([(m - 2, a - 1), (2, m - 2)]).unwrap();
            assert!(tpl.evaluate(&eq(m, a)).unwrap(), "m={m} a={a}");
        }
    }

    #[test]
    fn all_ones_when_left_equals_a() {
        assert!(t("[4->1]").evaluate(&eq(4, 3)).unwrap());
    }

    #[test]
    fn off_by_one_is_false() {
        assert!(!t("[7->2; 1->5]").evaluate(&eq(8, 3)).unwrap());
    }

    #[test]
    fn slot_mismatch_is_structural_error() {
        assert_eq!(
            t("[3->2; 1->4]").evaluate(&eq(5, 3)),
            Err(RadoError::SlotMismatch {
                expected: 5,
                got: 4
            })
        );
    }

    #[test]
    fn overflow_is_reported() {
        let tpl = SolutionTemplate::new([(2, u64::MAX / 2 + 1), (1, 1)]).unwrap();
        assert!(matches!(
            tpl.evaluate(&eq(3, 1)),
            Err(RadoError::Overflow(_))
        ));
        let tpl = SolutionTemplate::new([(1, 1), (1, u64::MAX)]).unwrap();
        assert!(matches!(
            tpl.evaluate(&eq(2, 2)),
            Err(RadoError::Overflow(_))
        ));
    }

    #[test]
    fn rejects_zero_values() {
        assert!(SolutionTemplate::new([(3, 0), (1, 1)]).is_err());
        assert!(SolutionTemplate::new([(0, 4)]).is_err());
    }

    #[test]
    fn values_unpacking() {
        assert_eq!(t("[3->2; 1->4]").values(4).unwrap(), (vec![2, 2, 2], 4));
        assert_eq!(t("[2->5; 2->6]").values(4).unwrap(), (vec![5, 5, 6], 6));
        let (left, target) = SolutionTemplate::new([(6, 3), (1, 6)])
            .unwrap()
            .values(7)
            .unwrap();
        assert_eq!(left, vec![3; 6]);
        assert_eq!(target, 6);
    }

    #[test]
    fn zero_count_groups_are_skipped() {
        let tpl = t("[2->1; 0->9; 1->1]");
        assert_eq!(tpl.values(3).unwrap(), (vec![1, 1], 1));
        assert_eq!(t("[3->1; 0->5]").values(3).unwrap(), (vec![1, 1], 1));
        assert_eq!(tpl.distinct_values(), vec![1]);
    }

    #[test]
    fn from_values_merges_target_run() {
        assert_eq!(
            SolutionTemplate::from_values(&[1, 1, 1], 1).unwrap(),
            t("[4->1]")
        );
        assert_eq!(
            SolutionTemplate::from_values(&[1, 2], 1).unwrap(),
            t("[1->1; 1->2; 1->1]")
        );
    }

    #[test]
    fn parse_and_display() {
        let tpl = t("[m→ 3; 1->4]".replace('m', "3").as_str());
        assert_eq!(tpl.to_string(), "[3->3; 1->4]");
        assert!("3->3".parse::<SolutionTemplate>().is_err());
        assert!("[3=>3]".parse::<SolutionTemplate>().is_err());
    }

    #[test]
    fn json_shape() {
        let tpl = t("[3->2; 1->4]");
        assert_eq!(
            serde_json::to_string(&tpl).unwrap(),
            r#"{"groups":[[3,2],[1,4]]}"#
        );
        let w = Witness {
            color: Color::Blue,
            template: tpl,
        };
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"color":"blue","template":{"groups":[[3,2],[1,4]]}}"#
        );
    }
}
