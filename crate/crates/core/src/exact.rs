//! Exact rational and dyadic arithmetic.
//!
//! Every quantity in this crate is an arbitrary-precision rational. [`Rat`]
//! is always kept in lowest terms with a positive denominator, so structural
//! equality and hashing coincide with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rat(BigRational::new(numer.into(), denom)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    /// `numer / denom` for small literals; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Rat::new(numer, denom).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// `1 / 2^k`.
    pub fn inv_pow2(k: u32) -> Self {
        Rat(BigRational::new(BigInt::one(), BigInt::one() << k))
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn mul_int(&self, k: impl Into<BigInt>) -> Self {
        Rat(&self.0 * BigRational::from_integer(k.into()))
    }

    /// The exponent `k` when the denominator is exactly `2^k`.
    pub fn dyadic_level(&self) -> Option<u64> {
        let d = self.denom();
        let k = d.trailing_zeros().unwrap_or(0);
        if (d >> k).is_one() {
            Some(k)
        } else {
            None
        }
    }

    /// Small-integer view, when the value is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

/// Exact comparison; the same total order as `Ord` on [`Rat`].
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                Rat((self.0).$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$m(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Division panics on a zero divisor, like the integer operators.
impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        &self / &rhs
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `p`, `p/q` and `-p/q` with decimal integers.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed rational `{s}`"));
        let int = |t: &str| -> Result<BigInt, Error> {
            let t = t.trim();
            if t.is_empty() || !t.trim_start_matches(['-', '+']).chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat::from_int(int(s)?)),
            Some((n, d)) => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Rat::new(int(n)?, d)
            }
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A dyadic rational `odd_num / 2^two_exp`.
///
/// `odd_num` is odd unless the value is zero, in which case `two_exp` is 0.
/// `two_exp` may be negative for even integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    odd_num: BigInt,
    two_exp: i64,
}

impl Dyadic {
    pub fn new(num: BigInt, two_exp: i64) -> Self {
        if num.is_zero() {
            return Dyadic {
                odd_num: num,
                two_exp: 0,
            };
        }
        let tz = num.trailing_zeros().unwrap_or(0);
        Dyadic {
            odd_num: num >> tz,
            two_exp: two_exp - tz as i64,
        }
    }

    pub fn odd_num(&self) -> &BigInt {
        &self.odd_num
    }

    pub fn two_exp(&self) -> i64 {
        self.two_exp
    }

    pub fn to_rat(&self) -> Rat {
        if self.two_exp >= 0 {
            Rat::new(self.odd_num.clone(), BigInt::one() << self.two_exp as u64).expect("nonzero")
        } else {
            Rat::from_int(&self.odd_num << (-self.two_exp) as u64)
        }
    }
}

impl TryFrom<&Rat> for Dyadic {
    type Error = Error;

    fn try_from(q: &Rat) -> Result<Self, Error> {
        let k = q
            .dyadic_level()
            .ok_or_else(|| Error::Domain(format!("{q} is not dyadic")))?;
        Ok(Dyadic::new(q.numer().clone(), k as i64))
    }
}

/// `q = alpha / (2^k * beta)` with `beta` odd and positive and `k` the 2-adic
/// valuation of the denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicSplit {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub k: u64,
}

pub fn dyadic_split(q: &Rat) -> DyadicSplit {
    let d = q.denom();
    let k = d.trailing_zeros().unwrap_or(0);
    DyadicSplit {
        alpha: q.numer().clone(),
        beta: d >> k,
        k,
    }
}

impl DyadicSplit {
    pub fn recompose(&self) -> Rat {
        Rat::new(self.alpha.clone(), (BigInt::one() << self.k) * &self.beta).expect("beta > 0")
    }
}

/// Odd part of the denominator of `q`.
pub fn odd_denominator(q: &Rat) -> BigInt {
    dyadic_split(q).beta
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            dyadic_split(&r("5/12")),
            DyadicSplit {
                alpha: 5.into(),
                beta: 3.into(),
                k: 2
            }
        );
        assert_eq!(
            dyadic_split(&r("2")),
            DyadicSplit {
                alpha: 2.into(),
                beta: 1.into(),
                k: 0
            }
        );
        assert_eq!(
            dyadic_split(&r("9/32")),
            DyadicSplit {
                alpha: 9.into(),
                beta: 1.into(),
                k: 5
            }
        );
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(rat_cmp(&r("1/3"), &r("1/2")), Ordering::Less);
        assert_eq!(rat_cmp(&r("2"), &r("2")), Ordering::Equal);
        assert_eq!(rat_cmp(&r("9/4"), &r("13/6")), Ordering::Greater);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("6/4").to_string(), "3/2");
        assert_eq!(r("-10/5").to_string(), "-2");
        assert_eq!(r(" 7 ").to_string(), "7");
        for bad in ["", "1/0", "a/2", "1/2/3", "1.5", "--1"] {
            assert!(bad.parse::<Rat>().is_err(), "{bad}");
        }
        assert_eq!(serde_json::to_string(&r("5/2")).unwrap(), "\"5/2\"");
        assert_eq!(serde_json::from_str::<Rat>("\"4\"").unwrap(), r("4"));
    }

    #[test]
    fn dyadic_roundtrip() {
        let d = Dyadic::try_from(&r("9/32")).unwrap();
        assert_eq!((d.odd_num().clone(), d.two_exp()), (9.into(), 5));
        let d = Dyadic::try_from(&r("12")).unwrap();
        assert_eq!((d.odd_num().clone(), d.two_exp()), (3.into(), -2));
        assert_eq!(d.to_rat(), r("12"));
        let z = Dyadic::try_from(&Rat::zero()).unwrap();
        assert_eq!(z.two_exp(), 0);
        assert!(Dyadic::try_from(&r("1/3")).is_err());
    }

    #[test]
    fn large_denominators_stay_exact() {
        let x = Rat::inv_pow2(20) + Rat::from_int(5);
        assert_eq!(x.dyadic_level(), Some(20));
        assert_eq!((x.clone() - Rat::inv_pow2(20)), Rat::from_int(5));
        assert_eq!(x.ceil(), 6.into());
    }
}
