use std::collections::HashSet;

use crate::error::{LocexError, Result};
use crate::rational::ExactRational;

/// A finite sequence of exact decimal values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealSequence {
    values: Vec<ExactRational>,
    distinct: bool,
}

impl RealSequence {
    pub fn new(values: Vec<ExactRational>) -> Self {
        let mut seen = HashSet::with_capacity(values.len());
        let distinct = values.iter().all(|v| seen.insert(v.clone()));
        RealSequence { values, distinct }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RealSequence::new(values.iter().map(|&v| ExactRational::from_integer(v)).collect())
    }

    pub fn parse_decimals<'a>(tokens: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let values = tokens
            .into_iter()
            .map(ExactRational::from_decimal)
            .collect::<Result<Vec<_>>>()?;
        Ok(RealSequence::new(values))
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether all values are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        self.distinct
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.values.is_empty() {
            Err(LocexError::Parameter("sequence is empty".into()))
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distinct_flag() {
        assert!(RealSequence::from_integers(&[2, 1, 4, 3]).is_distinct());
        assert!(!RealSequence::from_integers(&[1, 1]).is_distinct());
        let s = RealSequence::parse_decimals(["0.5", ".50", "1"]).unwrap();
        assert!(!s.is_distinct());
        assert!(RealSequence::parse_decimals(["1", "x"]).is_err());
    }
}
