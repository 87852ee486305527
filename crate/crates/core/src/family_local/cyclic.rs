//! Cyclic orders of `[n]` and the sets that appear in them as intervals.

use itertools::Itertools;

use super::matching::{ekr_report, MatchingStats};
use super::{exceeds, fail, family_id};
use crate::bits::set_label;
use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::rational::{factorial, ExactRational};
use crate::report::{ObjectWeight, ReportMode, Theorem, WeightReport};

/// Largest ground set for which all `(n-1)!` cyclic orders are enumerated.
pub const MAX_CYCLIC_N: usize = 8;

/// A cyclic arrangement of `0..n`, stored as a sequence; rotations are the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPermutation {
    order: Vec<usize>,
    /// `next[x]`: the element after `x` going around.
    next: Vec<usize>,
}

impl CyclicPermutation {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(LocexError::Parameter("cyclic order must be nonempty".into()));
        }
        let mut seen = vec![false; n];
        for &x in &order {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(LocexError::Structure(format!(
                    "cyclic order is not a permutation of 0..{n}"
                )));
            }
        }
        let mut next = vec![0; n];
        for i in 0..n {
            next[order[i]] = order[(i + 1) % n];
        }
        Ok(CyclicPermutation { order, next })
    }

    pub fn identity(n: usize) -> Result<Self> {
        CyclicPermutation::new((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Every cyclic order once, each written starting from 0.
    pub fn all(n: usize) -> Result<impl Iterator<Item = CyclicPermutation>> {
        if n == 0 {
            return Err(LocexError::Parameter("cyclic order must be nonempty".into()));
        }
        if n > MAX_CYCLIC_N {
            return Err(LocexError::capacity("ground set for cyclic enumeration", MAX_CYCLIC_N, n));
        }
        Ok((1..n).permutations(n - 1).map(|rest| {
            let mut order = Vec::with_capacity(rest.len() + 1);
            order.push(0);
            order.extend(rest);
            CyclicPermutation::new(order).expect("valid by construction")
        }))
    }

    /// Whether the elements of `set` are consecutive around the cycle. The empty
    /// set and the whole ground set count as intervals.
    pub fn is_interval(&self, set: u32) -> bool {
        let n = self.n();
        let k = set.count_ones() as usize;
        if k == 0 || k == n {
            return true;
        }
        // Exactly one element of the set is followed by a non-member.
        let mut exits = 0;
        let mut rest = set;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if x >= n {
                return false;
            }
            if set >> self.next[x] & 1 == 0 {
                exits += 1;
            }
        }
        exits == 1
    }
}

/// `Σ 1/m(A) <= r` over the members of the family that are intervals of `sigma`.
/// `stats` must be computed on the whole family.
pub fn cyclic_interval_check(
    f: &SetFamily,
    sigma: &CyclicPermutation,
    stats: &MatchingStats,
) -> Result<WeightReport> {
    if sigma.n() != f.n() {
        return Err(LocexError::Parameter(format!(
            "cyclic order has {} elements, ground set has {}",
            sigma.n(),
            f.n()
        )));
    }
    if stats.values.len() != f.len() {
        return Err(LocexError::Parameter("matching statistics do not match the family".into()));
    }
    let per: Vec<ObjectWeight> = f
        .sets()
        .iter()
        .zip(&stats.values)
        .filter(|(&s, _)| sigma.is_interval(s))
        .map(|(&s, m)| ObjectWeight::new(set_label(s as u64), m.clone(), m.recip()))
        .collect();
    let count = per.len();
    let order: Vec<String> = sigma.order().iter().map(|x| x.to_string()).collect();
    let report = WeightReport::new(
        Theorem::CyclicInterval,
        format!("{}@{}", family_id(f), order.join(" ")),
        per,
        ExactRational::from(stats.r as u64),
    )
    .witness(format!("{count} intervals"));
    if !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

/// Whether every member is an interval of exactly `|A|!(n-|A|)!` cyclic orders
/// (`(n-1)!` for the empty and the full set).
pub fn interval_count_identity(f: &SetFamily) -> Result<bool> {
    let n = f.n();
    let mut counts = vec![0u128; f.len()];
    for sigma in CyclicPermutation::all(n)? {
        for (c, &s) in counts.iter_mut().zip(f.sets()) {
            if sigma.is_interval(s) {
                *c += 1;
            }
        }
    }
    Ok(f.sets().iter().zip(&counts).all(|(&s, &c)| {
        let k = s.count_ones() as usize;
        let expected = if k == 0 || k == n {
            factorial(n as u64 - 1)
        } else {
            factorial(k as u64) * factorial((n - k) as u64)
        };
        c == expected
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCount {
    /// Sum of the per-order totals over all cyclic orders.
    pub sigma_total: ExactRational,
    /// `r!(n-r)!` times the local total.
    pub expected: ExactRational,
    /// `(n-1)! r`.
    pub bound: ExactRational,
}

/// Sums the interval bound over every cyclic order. For `0 < r < n` the sum
/// equals `r!(n-r)! Σ 1/m(A)` and is at most `(n-1)! r`.
pub fn cyclic_double_count(f: &SetFamily, stats: &MatchingStats) -> Result<DoubleCount> {
    let n = f.n();
    let r = stats.r;
    let mut sigma_total = ExactRational::zero();
    for sigma in CyclicPermutation::all(n)? {
        sigma_total += cyclic_interval_check(f, &sigma, stats)?.total;
    }
    let local = ekr_report(f, stats, ReportMode::ReportOnly)?.total;
    let expected = local * ExactRational::from(factorial(r as u64) * factorial((n - r) as u64));
    let bound = ExactRational::from(factorial(n as u64 - 1) * r as u128);
    Ok(DoubleCount {
        sigma_total,
        expected,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::level_sets;
    use crate::family_local::matching_weights;

    #[test]
    fn rotation_and_intervals() {
        let id = CyclicPermutation::identity(5).unwrap();
        assert!(id.is_interval(0b10001));
        assert!(id.is_interval(0b00110));
        assert!(!id.is_interval(0b00101));
        assert!(id.is_interval(0));
        assert!(id.is_interval(0b11111));
        assert!(CyclicPermutation::new(vec![0, 0, 1]).is_err());
        assert!(CyclicPermutation::new(vec![0, 3]).is_err());
        assert_eq!(CyclicPermutation::all(5).unwrap().count(), 24);
        assert!(CyclicPermutation::all(9).is_err());
    }

    #[test]
    fn interval_sums() {
        let f = SetFamily::uniform(5, 2, level_sets(5, &[2])).unwrap();
        let stats = matching_weights(&f).unwrap();
        let r = cyclic_interval_check(&f, &CyclicPermutation::identity(5).unwrap(), &stats).unwrap();
        assert_eq!(r.per_object.len(), 5);
        assert_eq!(r.total, ExactRational::from_integer(2));
        assert!(r.equality);

        let star: Vec<u32> = level_sets(6, &[2]).into_iter().filter(|s| s & 1 == 1).collect();
        let f = SetFamily::uniform(6, 2, star).unwrap();
        let stats = matching_weights(&f).unwrap();
        for sigma in CyclicPermutation::all(6).unwrap() {
            let r = cyclic_interval_check(&f, &sigma, &stats).unwrap();
            assert_eq!(r.per_object.len(), 2);
        }

        let empty = SetFamily::uniform(4, 2, vec![]).unwrap();
        let stats = matching_weights(&empty).unwrap();
        let r = cyclic_interval_check(&empty, &CyclicPermutation::identity(4).unwrap(), &stats).unwrap();
        assert!(r.total.is_zero());
    }

    #[test]
    fn counts_of_interval_orders() {
        let single = SetFamily::from_lists(5, &[&[1, 3]]).unwrap();
        assert!(interval_count_identity(&single).unwrap());
        let full = SetFamily::from_lists(4, &[&[0, 1, 2, 3]]).unwrap();
        assert!(interval_count_identity(&full).unwrap());
        let empty = SetFamily::new(6, vec![]).unwrap();
        assert!(interval_count_identity(&empty).unwrap());
        let everything = SetFamily::new(6, (0..64).collect()).unwrap();
        assert!(interval_count_identity(&everything).unwrap());
    }

    #[test]
    fn double_count_matches_local_total() {
        let f = SetFamily::uniform(5, 2, level_sets(5, &[2])).unwrap();
        let stats = matching_weights(&f).unwrap();
        let d = cyclic_double_count(&f, &stats).unwrap();
        assert_eq!(d.sigma_total, d.expected);
        assert_eq!(d.sigma_total, d.bound);
    }
}
