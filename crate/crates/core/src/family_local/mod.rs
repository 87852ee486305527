//! Set-local statistics for families of subsets of `[n]`.
//!
//! * `c(A)`: most sets in a chain of the family through `A`; `Σ 1/(C(n,|A|) c(A)) <= 1`.
//! * `m(A)`: largest matching of the family containing `A`, replaced by `n/r`
//!   when it reaches `⌊n/r⌋`; `Σ 1/m(A) <= C(n-1, r-1)` for `r`-uniform families.

mod cyclic;
mod matching;

pub use cyclic::{
    cyclic_double_count, cyclic_interval_check, interval_count_identity, CyclicPermutation,
    DoubleCount, MAX_CYCLIC_N,
};
pub use matching::{
    matching_weights, matching_weights_capped, verify_borg_recovery, verify_ekr_local,
    MatchingLimits, MatchingStats,
};

use crate::bits::set_label;
use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::io::write_family;
use crate::rational::{binomial, factorial, ExactRational};
use crate::report::{ObjectWeight, Theorem, WeightReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStats {
    /// `c(A)` per set, in family order.
    pub values: Vec<usize>,
    /// Longest chain ending at / starting from each set, for witnesses.
    down: Vec<usize>,
    up: Vec<usize>,
}

impl ChainStats {
    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Longest chain through each set: longest strictly descending chain ending at
/// `A` plus longest ascending chain starting at `A`, minus one.
pub fn chain_weights(f: &SetFamily) -> ChainStats {
    let sets = f.sets();
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&i| sets[i].count_ones());
    let mut down = vec![1usize; sets.len()];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if strict_subset(sets[j], sets[i]) && down[j] + 1 > down[i] {
                down[i] = down[j] + 1;
            }
        }
    }
    let mut up = vec![1usize; sets.len()];
    for (pos, &i) in order.iter().enumerate().rev() {
        for &j in &order[pos + 1..] {
            if strict_subset(sets[i], sets[j]) && up[j] + 1 > up[i] {
                up[i] = up[j] + 1;
            }
        }
    }
    let values = down.iter().zip(&up).map(|(d, u)| d + u - 1).collect();
    ChainStats { values, down, up }
}

fn strict_subset(a: u32, b: u32) -> bool {
    a != b && a & !b == 0
}

/// A longest chain through set `i`, bottom to top.
fn chain_through(f: &SetFamily, stats: &ChainStats, i: usize) -> Vec<u32> {
    let sets = f.sets();
    let mut below = Vec::new();
    let mut cur = i;
    while stats.down[cur] > 1 {
        cur = (0..sets.len())
            .find(|&j| strict_subset(sets[j], sets[cur]) && stats.down[j] + 1 == stats.down[cur])
            .expect("predecessor exists");
        below.push(sets[cur]);
    }
    below.reverse();
    below.push(sets[i]);
    let mut cur = i;
    while stats.up[cur] > 1 {
        cur = (0..sets.len())
            .find(|&j| strict_subset(sets[cur], sets[j]) && stats.up[j] + 1 == stats.up[cur])
            .expect("successor exists");
        below.push(sets[cur]);
    }
    below
}

fn lym_term(n: usize, size: u32) -> ExactRational {
    ExactRational::from(binomial(n as u64, size as u64)).recip()
}

/// The levels a nonempty family covers completely, if it is a union of complete levels.
pub fn complete_levels(f: &SetFamily) -> Option<Vec<usize>> {
    if f.is_empty() {
        return None;
    }
    let n = f.n() as u64;
    let profile = f.level_profile();
    let mut levels = Vec::new();
    for (k, &count) in profile.iter().enumerate() {
        if count == 0 {
            continue;
        }
        if count as u128 != binomial(n, k as u64) {
            return None;
        }
        levels.push(k);
    }
    Some(levels)
}

fn levels_label(levels: &[usize]) -> String {
    let parts: Vec<String> = levels.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn fail(f: &SetFamily, report: WeightReport, reason: String) -> LocexError {
    LocexError::violation(report.theorem.id(), reason, write_family(f), Some(report))
}

fn exceeds(report: &WeightReport) -> String {
    format!("total {} exceeds bound {}", report.total, report.bound)
}

/// `Σ 1/(C(n,|A|) c(A)) <= 1`, equality exactly for nonempty unions of complete levels.
pub fn verify_lym_local(f: &SetFamily) -> Result<WeightReport> {
    let stats = chain_weights(f);
    let per = f
        .sets()
        .iter()
        .zip(&stats.values)
        .map(|(&s, &c)| {
            let w = lym_term(f.n(), s.count_ones()) / ExactRational::from(c as u64);
            ObjectWeight::new(set_label(s as u64), (c as u64).into(), w)
        })
        .collect();
    let detector = complete_levels(f);
    let witness = match &detector {
        Some(levels) => format!("complete levels {}", levels_label(levels)),
        None => "not a union of complete levels".to_string(),
    };
    let report = WeightReport::new(Theorem::Lym, family_id(f), per, ExactRational::one()).witness(witness);
    if !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    if report.equality != detector.is_some() {
        let reason = format!(
            "equality flag {} but complete-levels detector says {}",
            report.equality,
            detector.is_some()
        );
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

/// Stable identifier for a family: ground size, set count and a hash of the sets.
pub fn family_id(f: &SetFamily) -> String {
    let mut sorted = f.sets().to_vec();
    sorted.sort_unstable();
    // FNV-1a
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for s in sorted {
        for b in s.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    }
    format!("f{}x{}:{h:016x}", f.n(), f.len())
}

/// `Σ 1/C(n,|A|) <= k` for a family without a `(k+1)`-chain, obtained from the
/// local bound since `c(A) <= k`. The precondition error carries a longest chain.
pub fn verify_katona_recovery(f: &SetFamily, k: usize) -> Result<WeightReport> {
    if k == 0 {
        return Err(LocexError::Parameter("k must be positive".into()));
    }
    let stats = chain_weights(f);
    if let Some(i) = (0..f.len()).find(|&i| stats.values[i] > k) {
        let chain = chain_through(f, &stats, i);
        let witness = chain.iter().take(k + 1).map(|&s| set_label(s as u64)).collect();
        return Err(LocexError::precondition(
            format!("family contains a {}-chain", k + 1),
            witness,
        ));
    }
    let local = verify_lym_local(f)?;
    let per: Vec<ObjectWeight> = f
        .sets()
        .iter()
        .map(|&s| {
            let b = binomial(f.n() as u64, s.count_ones() as u64);
            ObjectWeight::new(set_label(s as u64), b.into(), lym_term(f.n(), s.count_ones()))
        })
        .collect();
    let report = WeightReport::new(Theorem::Katona, family_id(f), per, ExactRational::from(k as u64))
        .witness(format!("no {}-chain; longest chain has {} sets", k + 1, stats.max()));
    // Each term is at most k times its local term.
    let scaled = &local.total * &ExactRational::from(k as u64);
    if report.total > scaled {
        return Err(LocexError::OracleMismatch(format!(
            "sum {} exceeds k times the local total {}",
            report.total, scaled
        )));
    }
    if !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

/// Sets comparable to no other set of the family count `1/C(n,|A|)`, the rest `1/2^n`.
pub fn verify_daykin_frankl(f: &SetFamily) -> Result<WeightReport> {
    let sets = f.sets();
    let n = f.n();
    let mut isolated = 0usize;
    let per = sets
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let alone = sets
                .iter()
                .enumerate()
                .all(|(j, &b)| i == j || (a & !b != 0 && b & !a != 0));
            if alone {
                isolated += 1;
                let b = binomial(n as u64, a.count_ones() as u64);
                ObjectWeight::new(set_label(a as u64), b.into(), lym_term(n, a.count_ones()))
                    .with_detail("incomparable")
            } else {
                let p = 1u64 << n;
                ObjectWeight::new(set_label(a as u64), p.into(), ExactRational::unit_fraction(p))
                    .with_detail("comparable")
            }
        })
        .collect();
    let report = WeightReport::new(Theorem::DaykinFrankl, family_id(f), per, ExactRational::one())
        .witness(format!("{isolated} incomparable, {} comparable", sets.len() - isolated));
    if !report.holds() {
        let reason = exceeds(&report);
        return Err(fail(f, report, reason));
    }
    Ok(report)
}

/// Number of maximal chains of `2^[n]` through each subset, by enumerating all
/// `n!` orderings of the ground set. Index `i` is the subset with bitmask `i`.
pub fn maximal_chain_counts(n: usize) -> Result<Vec<u128>> {
    const LIMIT: usize = 8;
    if n > LIMIT {
        return Err(LocexError::capacity("ground set for chain enumeration", LIMIT, n));
    }
    let mut counts = vec![0u128; 1 << n];
    for perm in itertools::Itertools::permutations(0..n, n) {
        let mut s = 0usize;
        counts[0] += 1;
        for x in perm {
            s |= 1 << x;
            counts[s] += 1;
        }
    }
    Ok(counts)
}

/// `|A|!(n-|A|)!`, the count each subset should have in [`maximal_chain_counts`].
pub fn expected_chain_count(n: usize, size: usize) -> u128 {
    factorial(size as u64) * factorial((n - size) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::level_sets;

    fn fam(n: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(n, lists).unwrap()
    }

    fn q(a: i64, b: i64) -> ExactRational {
        ExactRational::new(a, b)
    }

    #[test]
    fn chain_examples() {
        let all = SetFamily::new(2, level_sets(2, &[0, 1, 2])).unwrap();
        assert_eq!(chain_weights(&all).values, vec![3; 4]);
        let mid = SetFamily::new(3, level_sets(3, &[1, 2])).unwrap();
        assert_eq!(chain_weights(&mid).values, vec![2; 6]);
        let anti = fam(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        assert_eq!(chain_weights(&anti).values, vec![1; 3]);
    }

    #[test]
    fn lym_examples() {
        let mid = SetFamily::new(3, level_sets(3, &[1, 2])).unwrap();
        let r = verify_lym_local(&mid).unwrap();
        assert_eq!(r.total, ExactRational::one());
        assert!(r.equality);
        assert_eq!(r.witness, "complete levels {1,2}");

        let single = fam(3, &[&[1]]);
        let r = verify_lym_local(&single).unwrap();
        assert_eq!(r.total, q(1, 3));
        assert!(!r.equality);

        let all = SetFamily::new(2, level_sets(2, &[0, 1, 2])).unwrap();
        assert!(verify_lym_local(&all).unwrap().equality);

        let empty = SetFamily::new(3, vec![]).unwrap();
        let r = verify_lym_local(&empty).unwrap();
        assert!(r.total.is_zero() && !r.equality);
    }

    #[test]
    fn katona_examples() {
        let anti = SetFamily::new(4, level_sets(4, &[2])).unwrap();
        assert_eq!(verify_katona_recovery(&anti, 1).unwrap().total, ExactRational::one());
        let mid = SetFamily::new(3, level_sets(3, &[1, 2])).unwrap();
        assert_eq!(verify_katona_recovery(&mid, 2).unwrap().total, ExactRational::from_integer(2));
        let chain3 = fam(3, &[&[], &[0], &[0, 1]]);
        match verify_katona_recovery(&chain3, 2) {
            Err(LocexError::Precondition { witness, .. }) => {
                assert_eq!(witness, vec!["{}", "{0}", "{0,1}"]);
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
        assert!(matches!(verify_katona_recovery(&chain3, 0), Err(LocexError::Parameter(_))));
    }

    #[test]
    fn daykin_frankl_examples() {
        let r = verify_daykin_frankl(&fam(2, &[&[0], &[0, 1]])).unwrap();
        assert_eq!(r.total, q(1, 2));
        let r = verify_daykin_frankl(&fam(2, &[&[0], &[1]])).unwrap();
        assert_eq!(r.total, ExactRational::one());
        assert!(r.equality);
        let r = verify_daykin_frankl(&SetFamily::new(2, vec![]).unwrap()).unwrap();
        assert!(r.total.is_zero());
    }

    #[test]
    fn lym_over_every_family_on_three_points() {
        // 2^8 families; equality exactly on the 15 nonempty unions of levels.
        let mut equal = 0;
        for code in 0u32..1 << 8 {
            let sets: Vec<u32> = (0..8).filter(|&s| code >> s & 1 == 1).collect();
            let f = SetFamily::new(3, sets).unwrap();
            if verify_lym_local(&f).unwrap().equality {
                equal += 1;
            }
        }
        assert_eq!(equal, 15);
    }

    #[test]
    fn maximal_chains_through_each_subset() {
        for n in 0..=5 {
            let counts = maximal_chain_counts(n).unwrap();
            for (s, &c) in counts.iter().enumerate() {
                assert_eq!(c, expected_chain_count(n, (s as u32).count_ones() as usize));
            }
        }
        assert!(maximal_chain_counts(9).is_err());
    }
}
