//! Small helpers over `u64` / `u32` bit sets.

/// Iterates the indices of set bits, lowest first.
#[derive(Clone, Copy)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

#[inline]
pub fn ones(mask: u64) -> Ones {
    Ones(mask)
}

/// Mask with the low `n` bits set (`n <= 64`).
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Renders a set as `{a,b,c}`.
pub fn set_label(mask: u64) -> String {
    let inner: Vec<String> = ones(mask).map(|i| i.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_bits() {
        assert_eq!(ones(0b1011_0001).collect::<Vec<_>>(), vec![0, 4, 5, 7]);
        assert_eq!(ones(0).count(), 0);
        assert_eq!(ones(1 << 63).collect::<Vec<_>>(), vec![63]);
        assert_eq!(low_mask(64), u64::MAX);
        assert_eq!(low_mask(3), 7);
        assert_eq!(set_label(0b101), "{0,2}");
        assert_eq!(set_label(0), "{}");
    }
}
