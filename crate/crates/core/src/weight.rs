//! Exact rational weights.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact rational number. Always normalized: the denominator is positive
/// and coprime with the numerator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Weight(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Weight(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn one() -> Self {
        Weight(BigRational::one())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Weight(self.0.abs())
    }

    /// Parses `-3`, `2/3`, `-0.25` exactly. Decimals never pass through
    /// floating point.
    pub fn parse(text: &str) -> Option<Self> {
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        if body.is_empty() {
            return None;
        }
        let value = if let Some((num, den)) = body.split_once('/') {
            let num = parse_digits(num)?;
            let den = parse_digits(den)?;
            if den.is_zero() {
                return None;
            }
            BigRational::new(num, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            let int = parse_digits(int)?;
            let frac_digits = parse_digits(frac)?;
            let scale = num_traits::pow(BigInt::from(10u8), frac.len());
            BigRational::new(int * &scale + frac_digits, scale)
        } else {
            BigRational::from_integer(parse_digits(body)?)
        };
        Some(Weight(if negative { -value } else { value }))
    }
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl From<i64> for Weight {
    fn from(n: i64) -> Self {
        Weight::from_integer(n)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(&self.0 + &rhs.0)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(&self.0 - &rhs.0)
    }
}

impl Mul for &Weight {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(&self.0 * &rhs.0)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-&self.0)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0)
    }
}

/// The codomain of an aggregate function: rationals plus both infinities.
///
/// Variant order gives the total order `MinusInf < Finite(_) < PlusInf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedValue {
    MinusInf,
    Finite(Weight),
    PlusInf,
}

impl ExtendedValue {
    pub fn cmp_weight(&self, w: &Weight) -> Ordering {
        match self {
            ExtendedValue::MinusInf => Ordering::Less,
            ExtendedValue::Finite(v) => v.cmp(w),
            ExtendedValue::PlusInf => Ordering::Greater,
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::MinusInf => f.write_str("-inf"),
            ExtendedValue::Finite(w) => w.fmt(f),
            ExtendedValue::PlusInf => f.write_str("+inf"),
        }
    }
}
