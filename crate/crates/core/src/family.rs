//! Families of distinct subsets of a ground set `[n]`, `n <= 24`.

use std::collections::HashSet;

use crate::bits::{ones, set_label};
use crate::error::{LocexError, Result};

pub const MAX_GROUND: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: usize,
    sets: Vec<u32>,
    uniformity: Option<usize>,
}

impl SetFamily {
    pub fn new(n: usize, sets: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(LocexError::Parameter("ground set must be nonempty".into()));
        }
        if n > MAX_GROUND {
            return Err(LocexError::capacity("ground set size", MAX_GROUND, n));
        }
        let limit = (1u64 << n) - 1;
        let mut seen = HashSet::with_capacity(sets.len());
        for &s in &sets {
            if s as u64 & !limit != 0 {
                return Err(LocexError::Structure(format!(
                    "set {} has an element >= {n}",
                    set_label(s as u64)
                )));
            }
            if !seen.insert(s) {
                return Err(LocexError::Structure(format!(
                    "set {} appears twice",
                    set_label(s as u64)
                )));
            }
        }
        Ok(SetFamily {
            n,
            sets,
            uniformity: None,
        })
    }

    /// Builds the family and declares that every set has exactly `r` elements.
    pub fn uniform(n: usize, r: usize, sets: Vec<u32>) -> Result<Self> {
        SetFamily::new(n, sets)?.with_uniformity(r)
    }

    pub fn with_uniformity(mut self, r: usize) -> Result<Self> {
        if r > self.n {
            return Err(LocexError::Parameter(format!("uniformity {r} exceeds n = {}", self.n)));
        }
        if let Some(&bad) = self.sets.iter().find(|s| s.count_ones() as usize != r) {
            return Err(LocexError::Structure(format!(
                "set {} does not have {r} elements",
                set_label(bad as u64)
            )));
        }
        self.uniformity = Some(r);
        Ok(self)
    }

    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            let mut s = 0u32;
            for &x in *list {
                if x >= n || x >= 32 {
                    return Err(LocexError::Structure(format!("element {x} out of range")));
                }
                s |= 1 << x;
            }
            sets.push(s);
        }
        SetFamily::new(n, sets)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sets(&self) -> &[u32] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn declared_uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    /// Declared uniformity, or the common set size when every set has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        if self.uniformity.is_some() {
            return self.uniformity;
        }
        let first = self.sets.first()?.count_ones() as usize;
        self.sets
            .iter()
            .all(|s| s.count_ones() as usize == first)
            .then_some(first)
    }

    pub fn label(&self, i: usize) -> String {
        set_label(self.sets[i] as u64)
    }

    pub fn elements(&self, i: usize) -> Vec<usize> {
        ones(self.sets[i] as u64).collect()
    }

    /// Number of sets of each size `0..=n`.
    pub fn level_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for s in &self.sets {
            counts[s.count_ones() as usize] += 1;
        }
        counts
    }
}

/// All subsets of `[n]` whose size is in `levels`, in increasing numeric order.
pub fn level_sets(n: usize, levels: &[usize]) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|s| levels.contains(&(s.count_ones() as usize)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates() {
        assert!(SetFamily::new(3, vec![0b001, 0b001]).is_err());
        assert!(SetFamily::new(3, vec![0b1000]).is_err());
        assert!(SetFamily::new(25, vec![]).is_err());
        assert!(SetFamily::uniform(4, 2, vec![0b0011, 0b0111]).is_err());
        let f = SetFamily::uniform(4, 2, vec![0b0011, 0b1100]).unwrap();
        assert_eq!(f.uniformity(), Some(2));
        assert_eq!(f.label(1), "{2,3}");
    }

    #[test]
    fn inferred_uniformity() {
        let f = SetFamily::new(4, vec![0b0011, 0b0101]).unwrap();
        assert_eq!(f.declared_uniformity(), None);
        assert_eq!(f.uniformity(), Some(2));
        assert_eq!(SetFamily::new(4, vec![0b1, 0b11]).unwrap().uniformity(), None);
        assert_eq!(SetFamily::new(4, vec![]).unwrap().uniformity(), None);
    }

    #[test]
    fn levels() {
        assert_eq!(level_sets(3, &[1, 2]).len(), 6);
        assert_eq!(level_sets(2, &[0, 1, 2]), vec![0, 1, 2, 3]);
    }
}
