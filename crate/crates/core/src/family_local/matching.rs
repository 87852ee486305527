//! Exact `m(A)` by branch and bound over set packings that contain `A`.

use super::{exceeds, fail, family_id};
use crate::bits::set_label;
use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::rational::{binomial, ExactRational};
use crate::report::{ObjectWeight, ReportMode, Theorem, WeightReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingLimits {
    pub max_sets: usize,
}

impl Default for MatchingLimits {
    fn default() -> Self {
        MatchingLimits { max_sets: 2000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingStats {
    pub r: usize,
    /// Largest matching containing each set, before the cap.
    pub raw: Vec<usize>,
    /// `m(A)`: `raw`, or `n/r` when `raw = ⌊n/r⌋`.
    pub values: Vec<ExactRational>,
    pub cap_applied: Vec<bool>,
    pub nodes: u64,
}

fn uniformity(f: &SetFamily) -> Result<usize> {
    let r = f
        .uniformity()
        .ok_or_else(|| LocexError::Parameter("family is not uniform; declare r".into()))?;
    if r == 0 {
        return Err(LocexError::Parameter("uniformity must be positive".into()));
    }
    Ok(r)
}

pub fn matching_weights(f: &SetFamily) -> Result<MatchingStats> {
    matching_weights_capped(f, MatchingLimits::default())
}

pub fn matching_weights_capped(f: &SetFamily, limits: MatchingLimits) -> Result<MatchingStats> {
    let r = uniformity(f)?;
    if f.len() > limits.max_sets {
        return Err(LocexError::capacity("family size for exact matching", limits.max_sets, f.len()));
    }
    let n = f.n();
    let target = n / r;
    let sets = f.sets();
    let mut raw = vec![0usize; sets.len()];
    let mut nodes = 0u64;
    for i in 0..sets.len() {
        if raw[i] == target {
            continue;
        }
        let a = sets[i];
        let cands: Vec<u32> = sets.iter().copied().filter(|&b| b & a == 0).collect();
        let mut search = Packing {
            r,
            target: target - 1,
            best: 0,
            best_sets: Vec::new(),
            stack: Vec::new(),
            nodes: 0,
        };
        search.run(&cands);
        nodes += search.nodes;
        raw[i] = search.best + 1;
        if raw[i] == target {
            // Every set of a maximum matching shares its size.
            for s in search.best_sets {
                if let Some(j) = sets.iter().position(|&x| x == s) {
                    raw[j] = target;
                }
            }
        }
    }
    let cap = ExactRational::new(n as i64, r as i64);
    let cap_applied: Vec<bool> = raw.iter().map(|&m| m == target).collect();
    let values = raw
        .iter()
        .zip(&cap_applied)
        .map(|(&m, &c)| if c { cap.clone() } else { ExactRational::from(m as u64) })
        .collect();
    Ok(MatchingStats {
        r,
        raw,
        values,
        cap_applied,
        nodes,
    })
}

struct Packing {
    r: usize,
    target: usize,
    best: usize,
    best_sets: Vec<u32>,
    stack: Vec<u32>,
    nodes: u64,
}

impl Packing {
    fn run(&mut self, cands: &[u32]) {
        self.nodes += 1;
        let size = self.stack.len();
        if size > self.best {
            self.best = size;
            self.best_sets = self.stack.clone();
        }
        if self.best >= self.target || cands.is_empty() {
            return;
        }
        let union = cands.iter().fold(0u32, |u, &s| u | s);
        let room = (union.count_ones() as usize / self.r).min(cands.len());
        if size + room <= self.best {
            return;
        }
        // Branch on the element in the fewest candidates: either one of those
        // sets is used, or the element stays uncovered.
        let mut freq = [0u32; 32];
        for &s in cands {
            let mut rest = s;
            while rest != 0 {
                freq[rest.trailing_zeros() as usize] += 1;
                rest &= rest - 1;
            }
        }
        let e = (0..32)
            .filter(|&x| union >> x & 1 == 1)
            .min_by_key(|&x| freq[x])
            .expect("union nonempty");
        let bit = 1u32 << e;
        for &s in cands.iter().filter(|&&s| s & bit != 0) {
            let next: Vec<u32> = cands.iter().copied().filter(|&t| t & s == 0).collect();
            self.stack.push(s);
            self.run(&next);
            self.stack.pop();
            if self.best >= self.target {
                return;
            }
        }
        let without: Vec<u32> = cands.iter().copied().filter(|&t| t & bit == 0).collect();
        self.run(&without);
    }
}

/// `Σ 1/m(A) <= C(n-1, r-1)`. Only asserted for `r < n/2`; otherwise, or with
/// [`ReportMode::ReportOnly`], the report is returned whatever it says.
pub fn verify_ekr_local(f: &SetFamily, mode: ReportMode) -> Result<WeightReport> {
    let stats = matching_weights(f)?;
    ekr_report(f, &stats, mode)
}

pub(crate) fn ekr_report(f: &SetFamily, stats: &MatchingStats, mode: ReportMode) -> Result<WeightReport> {
    let n = f.n();
    let r = stats.r;
    let per = f
        .sets()
        .iter()
        .zip(&stats.values)
        .zip(&stats.cap_applied)
        .map(|((&s, m), &capped)| {
            let w = ObjectWeight::new(set_label(s as u64), m.clone(), m.recip());
            if capped {
                w.with_detail("capped")
            } else {
                w
            }
        })
        .collect();
    let bound = ExactRational::from(binomial(n as u64 - 1, r as u64 - 1));
    let report = WeightReport::new(Theorem::Ekr, family_id(f), per, bound).stat("matching_nodes", stats.nodes);
    let witness = if report.equality {
        classify_equality(f, r)
    } else if 2 * r >= n {
        "r >= n/2, not asserted".to_string()
    } else {
        "strict".to_string()
    };
    let report = report.witness(witness);
    if mode == ReportMode::Assert && 2 * r < n && !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

/// Names the known extremal constructions; anything else is "unclassified equality".
fn classify_equality(f: &SetFamily, r: usize) -> String {
    let n = f.n() as u64;
    let r64 = r as u64;
    let sets = f.sets();
    let size = sets.len() as u128;
    if size == binomial(n, r64) {
        return "full level".into();
    }
    let common = sets.iter().fold(u32::MAX, |c, &s| c & s);
    if common != 0 && size == binomial(n - 1, r64 - 1) {
        return format!("star at {}", common.trailing_zeros());
    }
    if n >= 2 && size == binomial(n, r64) - binomial(n - 2, r64) {
        for a in 0..f.n() {
            for b in a + 1..f.n() {
                let pair = 1u32 << a | 1 << b;
                if sets.iter().all(|&s| s & pair != 0) {
                    return format!("two fixed elements {}", set_label(pair as u64));
                }
            }
        }
    }
    "unclassified equality".into()
}

/// `|S| + (r/n)|T| <= C(n-1, r-1)` where `S` are the sets meeting every member.
/// Cross-checked against the local total, which dominates it term by term.
pub fn verify_borg_recovery(f: &SetFamily, mode: ReportMode) -> Result<WeightReport> {
    let stats = matching_weights(f)?;
    let ekr = ekr_report(f, &stats, ReportMode::ReportOnly)?;
    let n = f.n();
    let r = stats.r;
    let sets = f.sets();
    let light = ExactRational::new(r as i64, n as i64);
    let mut s_count = 0usize;
    let per: Vec<ObjectWeight> = sets
        .iter()
        .map(|&a| {
            if sets.iter().all(|&b| a & b != 0) {
                s_count += 1;
                ObjectWeight::new(set_label(a as u64), ExactRational::one(), ExactRational::one())
                    .with_detail("intersecting")
            } else {
                ObjectWeight::new(set_label(a as u64), light.recip(), light.clone())
                    .with_detail("has disjoint partner")
            }
        })
        .collect();
    let bound = ExactRational::from(binomial(n as u64 - 1, r as u64 - 1));
    let report = WeightReport::new(Theorem::Borg, family_id(f), per, bound)
        .witness(format!("|S|={s_count}, |T|={}", sets.len() - s_count));
    if report.total > ekr.total {
        return Err(LocexError::OracleMismatch(format!(
            "intersection-split total {} exceeds matching total {}",
            report.total, ekr.total
        )));
    }
    if mode == ReportMode::Assert && 2 * r < n && !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::level_sets;

    fn level(n: usize, r: usize) -> SetFamily {
        SetFamily::uniform(n, r, level_sets(n, &[r])).unwrap()
    }

    fn star(n: usize, r: usize) -> SetFamily {
        let sets = level_sets(n, &[r]).into_iter().filter(|s| s & 1 == 1).collect();
        SetFamily::uniform(n, r, sets).unwrap()
    }

    #[test]
    fn matching_examples() {
        let m = matching_weights(&level(5, 2)).unwrap();
        assert!(m.values.iter().all(|v| *v == ExactRational::new(5, 2)));
        assert!(m.cap_applied.iter().all(|&c| c));
        let m = matching_weights(&star(6, 2)).unwrap();
        assert!(m.values.iter().all(|v| *v == ExactRational::one()));
        let two = SetFamily::from_lists(4, &[&[0, 1], &[2, 3]]).unwrap();
        let m = matching_weights(&two).unwrap();
        assert_eq!(m.raw, vec![2, 2]);
        assert!(m.values.iter().all(|v| *v == ExactRational::from_integer(2)));
    }

    #[test]
    fn matching_needs_uniformity() {
        let mixed = SetFamily::from_lists(4, &[&[0], &[1, 2]]).unwrap();
        assert!(matches!(matching_weights(&mixed), Err(LocexError::Parameter(_))));
        let big = level(12, 4);
        let limits = MatchingLimits { max_sets: 100 };
        assert!(matches!(matching_weights_capped(&big, limits), Err(LocexError::Capacity { .. })));
    }

    #[test]
    fn ekr_examples() {
        let r = verify_ekr_local(&level(5, 2), ReportMode::Assert).unwrap();
        assert_eq!(r.total, ExactRational::from_integer(4));
        assert!(r.equality);
        assert_eq!(r.witness, "full level");
        let r = verify_ekr_local(&star(6, 2), ReportMode::Assert).unwrap();
        assert_eq!(r.total, ExactRational::from_integer(5));
        assert_eq!(r.witness, "star at 0");
        let meets: Vec<u32> = level_sets(6, &[2]).into_iter().filter(|s| s & 0b11 != 0).collect();
        let f = SetFamily::uniform(6, 2, meets).unwrap();
        let r = verify_ekr_local(&f, ReportMode::Assert).unwrap();
        assert_eq!(r.total, ExactRational::from_integer(5));
        assert_eq!(r.witness, "two fixed elements {0,1}");
    }

    #[test]
    fn borg_examples() {
        let r = verify_borg_recovery(&star(6, 2), ReportMode::Assert).unwrap();
        assert_eq!(r.total, ExactRational::from_integer(5));
        assert!(r.equality);
        let r = verify_borg_recovery(&level(5, 2), ReportMode::Assert).unwrap();
        assert_eq!(r.total, ExactRational::from_integer(4));
        let empty = SetFamily::uniform(5, 2, vec![]).unwrap();
        assert!(verify_borg_recovery(&empty, ReportMode::Assert).unwrap().total.is_zero());
    }
}
