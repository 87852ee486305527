//! Exact rational arithmetic.
//!
//! Every weight, total, bound and slack in the crate is an [`ExactRational`].
//! Values are kept in lowest terms with a positive denominator, so structural
//! equality is numeric equality and `slack == 0` is a sound equality test.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LocexError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, LocexError> {
        if den.is_zero() {
            return Err(LocexError::Parameter("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(num, den)))
    }

    /// `1 / n` for a positive count.
    pub fn unit_fraction(n: u64) -> Self {
        assert!(n > 0, "unit fraction of zero");
        ExactRational(BigRational::new(BigInt::one(), BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        ExactRational(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Lossy conversion for plotting and summaries only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Parses a decimal literal such as `-12`, `3.25`, `.5`, `1e-3` or `+2.5E4`
    /// into its exact value.
    pub fn from_decimal(text: &str) -> Result<Self, LocexError> {
        let bad = || LocexError::Parameter(format!("not a decimal literal: {text:?}"));
        let (mantissa, exponent) = match text.find(['e', 'E']) {
            Some(i) => {
                let exp: i32 = text[i + 1..].parse().map_err(|_| bad())?;
                (&text[..i], exp)
            }
            None => (text, 0),
        };
        let (negative, body) = match mantissa.as_bytes().first() {
            Some(b'-') => (true, &mantissa[1..]),
            Some(b'+') => (false, &mantissa[1..]),
            _ => (false, mantissa),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((a, b)) => (a, b),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        // Exponents this large are not decimal data, and 10^|exp| would be huge.
        if exponent.unsigned_abs() > 4096 {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        if negative {
            num = -num;
        }
        let scale = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10);
        let value = if scale >= 0 {
            BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
        };
        Ok(ExactRational(value))
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        ExactRational::from_integer(n)
    }
}

impl From<u64> for ExactRational {
    fn from(n: u64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<u128> for ExactRational {
    fn from(n: u128) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        ExactRational(BigRational::from_integer(n))
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, including `18/1` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = LocexError;

    /// Accepts `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LocexError::Parameter(format!("not a rational: {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s, "1"),
        };
        let valid = |t: &str| {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num) || !valid(den) {
            return Err(bad());
        }
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        ExactRational::from_big(num, den)
    }
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign for ExactRational {
    fn add_assign(&mut self, rhs: ExactRational) {
        self.0 += rhs.0;
    }
}

impl<'a> AddAssign<&'a ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &'a ExactRational) {
        self.0 += &rhs.0;
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        exact_sum(iter)
    }
}

impl<'a> Sum<&'a ExactRational> for ExactRational {
    fn sum<I: Iterator<Item = &'a ExactRational>>(iter: I) -> Self {
        let mut acc = ExactRational::zero();
        for w in iter {
            acc += w;
        }
        acc
    }
}

/// Exact sum; the empty sum is zero.
///
/// Unit fractions dominate the workloads here, so terms are grouped by
/// denominator first and only the distinct denominators are combined.
pub fn exact_sum<I: IntoIterator<Item = ExactRational>>(weights: I) -> ExactRational {
    let mut by_den: std::collections::BTreeMap<BigInt, BigInt> = Default::default();
    for w in weights {
        let (num, den) = w.0.into_raw();
        *by_den.entry(den).or_insert_with(BigInt::zero) += num;
    }
    let mut acc = BigRational::zero();
    for (den, num) in by_den {
        acc += BigRational::new(num, den);
    }
    ExactRational(acc)
}

/// Binomial coefficient C(n, k) as u128; zero when k > n.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn sums_of_small_vectors() {
        assert_eq!(exact_sum(vec![q(1, 2), q(1, 3), q(1, 6)]), ExactRational::one());
        assert_eq!(exact_sum(Vec::new()), ExactRational::zero());
        assert_eq!(exact_sum(vec![q(3, 2); 12]), ExactRational::from_integer(18));
    }

    #[test]
    fn lowest_terms_and_sign() {
        let x = q(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(ExactRational::from_integer(18).to_string(), "18/1");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("31/30".parse::<ExactRational>().unwrap(), q(31, 30));
        assert_eq!("-4".parse::<ExactRational>().unwrap(), q(-4, 1));
        assert_eq!("2/4".parse::<ExactRational>().unwrap(), q(1, 2));
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("".parse::<ExactRational>().is_err());
        assert!("1/2/3".parse::<ExactRational>().is_err());
        assert!("x/2".parse::<ExactRational>().is_err());
    }

    #[test]
    fn decimals_are_exact() {
        let d = |s: &str| ExactRational::from_decimal(s).unwrap();
        assert_eq!(d("0.1"), q(1, 10));
        assert_eq!(d("-2.50"), q(-5, 2));
        assert_eq!(d(".5"), q(1, 2));
        assert_eq!(d("7."), q(7, 1));
        assert_eq!(d("1e3"), q(1000, 1));
        assert_eq!(d("2.5E-2"), q(1, 40));
        assert!(d("0.1") != d("0.10000000000000000001"));
        for bad in ["", "-", ".", "1.2.3", "e5", "1e", "abc", "1e99999"] {
            assert!(ExactRational::from_decimal(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(factorial(7), 5040);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb() -> impl Strategy<Value = ExactRational> {
            (-50i64..50, 1i64..40).prop_map(|(n, d)| ExactRational::new(n, d))
        }

        proptest! {
            #[test]
            fn add_is_associative_and_commutative(a in arb(), b in arb(), c in arb()) {
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn grouped_sum_matches_fold(xs in proptest::collection::vec(arb(), 0..20)) {
                let folded = xs.iter().fold(ExactRational::zero(), |acc, x| acc + x);
                prop_assert_eq!(exact_sum(xs), folded);
            }

            #[test]
            fn display_parse_roundtrip(a in arb()) {
                let back: ExactRational = a.to_string().parse().unwrap();
                prop_assert_eq!(&back, &a);
                // Re-normalizing a normalized value changes nothing.
                let again = ExactRational::from_big(a.numer().clone(), a.denom().clone()).unwrap();
                prop_assert_eq!(again, a);
            }
        }
    }
}
