//! Finite posets on at most 64 elements, stored as a reflexive `leq` bit matrix.

use crate::bits::{low_mask, ones};
use crate::error::{LocexError, Result};

pub const MAX_ELEMENTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    m: usize,
    /// `leq[x]` has bit `y` set iff `x <= y`.
    leq: Vec<u64>,
    rank: Option<Vec<usize>>,
    level_counts: Option<Vec<usize>>,
}

impl RankedPoset {
    /// Poset generated by the strict relations `u < v` in `relations`
    /// (reflexive-transitive closure is taken). Fails on cycles.
    pub fn from_relations(m: usize, relations: &[(usize, usize)]) -> Result<Self> {
        check_size(m)?;
        let mut leq: Vec<u64> = (0..m).map(|x| 1u64 << x).collect();
        for &(u, v) in relations {
            if u >= m || v >= m {
                return Err(LocexError::Structure(format!("relation {u}<{v} out of range")));
            }
            if u == v {
                return Err(LocexError::Structure(format!(
                    "antisymmetry violated: {u} < {u}"
                )));
            }
            leq[u] |= 1 << v;
        }
        // Warshall closure on bit rows.
        for k in 0..m {
            let row_k = leq[k];
            for row in leq.iter_mut() {
                if *row >> k & 1 == 1 {
                    *row |= row_k;
                }
            }
        }
        for x in 0..m {
            for y in ones(leq[x] & !(1u64 << x)) {
                if leq[y] >> x & 1 == 1 {
                    return Err(LocexError::Structure(format!(
                        "antisymmetry violated: {x} < {y} and {y} < {x}"
                    )));
                }
            }
        }
        Ok(RankedPoset {
            m,
            leq,
            rank: None,
            level_counts: None,
        })
    }

    /// Takes a full `leq` matrix and checks the three partial-order axioms.
    pub fn from_matrix(leq: Vec<u64>) -> Result<Self> {
        let m = leq.len();
        check_size(m)?;
        let all = low_mask(m);
        for x in 0..m {
            if leq[x] & !all != 0 {
                return Err(LocexError::Structure(format!("row {x} names an element >= {m}")));
            }
            if leq[x] >> x & 1 == 0 {
                return Err(LocexError::Structure(format!("reflexivity violated at {x}")));
            }
            for y in ones(leq[x] & !(1u64 << x)) {
                if leq[y] >> x & 1 == 1 {
                    return Err(LocexError::Structure(format!(
                        "antisymmetry violated: {x} <= {y} and {y} <= {x}"
                    )));
                }
                if leq[y] & !leq[x] != 0 {
                    let z = (leq[y] & !leq[x]).trailing_zeros();
                    return Err(LocexError::Structure(format!(
                        "transitivity violated: {x} <= {y} <= {z} but not {x} <= {z}"
                    )));
                }
            }
        }
        Ok(RankedPoset {
            m,
            leq,
            rank: None,
            level_counts: None,
        })
    }

    /// Attaches a rank function. Strictly smaller elements must get strictly smaller ranks.
    pub fn with_rank(mut self, rank: Vec<usize>) -> Result<Self> {
        if rank.len() != self.m {
            return Err(LocexError::Structure(format!(
                "rank has {} entries for {} elements",
                rank.len(),
                self.m
            )));
        }
        for x in 0..self.m {
            for y in ones(self.leq[x] & !(1u64 << x)) {
                if rank[x] >= rank[y] {
                    return Err(LocexError::Structure(format!(
                        "rank not strictly increasing on {x} < {y}"
                    )));
                }
            }
        }
        let top = rank.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; top + 1];
        for &r in &rank {
            counts[r] += 1;
        }
        self.rank = Some(rank);
        self.level_counts = Some(counts);
        Ok(self)
    }

    pub fn chain(m: usize) -> Result<Self> {
        let rel: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        RankedPoset::from_relations(m, &rel)?.with_rank((0..m).collect())
    }

    pub fn antichain(m: usize) -> Result<Self> {
        RankedPoset::from_relations(m, &[])?.with_rank(vec![0; m])
    }

    /// Subsets of `[n]` under inclusion, element `i` being the set with bit pattern `i`,
    /// ranked by cardinality.
    pub fn boolean_lattice(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(LocexError::capacity("boolean lattice dimension", 6, n));
        }
        let m = 1usize << n;
        let leq = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| a & b == a)
                    .fold(0u64, |acc, b| acc | 1 << b)
            })
            .collect();
        let rank = (0..m).map(|a: usize| a.count_ones() as usize).collect();
        RankedPoset::from_matrix(leq)?.with_rank(rank)
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x] >> y & 1 == 1
    }

    #[inline]
    pub fn less(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements strictly above `x`.
    pub fn up_set(&self, x: usize) -> u64 {
        self.leq[x] & !(1u64 << x)
    }

    /// Elements strictly below `x`.
    pub fn down_set(&self, x: usize) -> u64 {
        (0..self.m)
            .filter(|&y| self.less(y, x))
            .fold(0, |acc, y| acc | 1 << y)
    }

    pub fn matrix(&self) -> &[u64] {
        &self.leq
    }

    pub fn rank(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    pub fn level_counts(&self) -> Option<&[usize]> {
        self.level_counts.as_deref()
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.m {
            let above = self.up_set(x);
            for y in ones(above) {
                let between = above & self.down_set(y);
                if between == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_chain(&self, mask: u64) -> bool {
        let items: Vec<usize> = ones(mask).collect();
        items
            .iter()
            .enumerate()
            .all(|(i, &x)| items[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    pub fn is_antichain(&self, mask: u64) -> bool {
        let items: Vec<usize> = ones(mask).collect();
        items
            .iter()
            .enumerate()
            .all(|(i, &x)| items[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }
}

fn check_size(m: usize) -> Result<()> {
    if m == 0 {
        return Err(LocexError::Parameter("poset needs at least one element".into()));
    }
    if m > MAX_ELEMENTS {
        return Err(LocexError::capacity("poset size", MAX_ELEMENTS, m));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_axioms() {
        let p = RankedPoset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(RankedPoset::from_relations(2, &[(0, 1), (1, 0)]).is_err());
        assert!(RankedPoset::from_relations(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn matrix_validation_names_axiom() {
        let err = RankedPoset::from_matrix(vec![0b01, 0b00]).unwrap_err();
        assert!(err.to_string().contains("reflexivity"));
        let err = RankedPoset::from_matrix(vec![0b011, 0b110, 0b100]).unwrap_err();
        assert!(err.to_string().contains("transitivity"));
        let err = RankedPoset::from_matrix(vec![0b11, 0b11]).unwrap_err();
        assert!(err.to_string().contains("antisymmetry"));
    }

    #[test]
    fn ranks() {
        let b = RankedPoset::boolean_lattice(3).unwrap();
        assert_eq!(b.level_counts().unwrap(), &[1, 3, 3, 1]);
        assert!(b.less(0b001, 0b011));
        assert!(!b.comparable(0b001, 0b010));
        let p = RankedPoset::from_relations(2, &[(0, 1)]).unwrap();
        assert!(p.clone().with_rank(vec![1, 1]).is_err());
        assert!(p.with_rank(vec![0]).is_err());
    }

    #[test]
    fn chains_and_antichains() {
        let b = RankedPoset::boolean_lattice(2).unwrap();
        assert!(b.is_chain(0b1011));
        assert!(b.is_antichain(0b0110));
        assert!(!b.is_antichain(0b0011));
    }
}
