//! Scalar abstractions shared by the exact and floating-point code paths.
//!
//! Everything exact in this crate is written against [`Ring`] (integral
//! domains with exact division) or [`Field`]. The concrete instances used in
//! practice are [`BigInt`], [`BigRational`], integer polynomials and the
//! quadratic extension in [`crate::quad`].

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A commutative integral domain in which divisibility can be decided.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Returns `q` with `self == q * rhs`, or `None` if no such `q` exists.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;
}

/// A field: every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

/// A field carrying an involution `conj`, the setting for hermitian forms.
///
/// `real_sign` is only meaningful on self-conjugate elements.
pub trait InvolutiveField: Field {
    fn conj(&self) -> Self;

    fn is_self_conjugate(&self) -> bool {
        self.conj() == *self
    }

    /// Sign (-1, 0, 1) of a self-conjugate element.
    fn real_sign(&self) -> i32;
}

impl Ring for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for i64 {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 || self % rhs != 0 {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn from_i64(n: i64) -> Self {
        n
    }
}

impl Ring for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        Field::div(self, rhs)
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl InvolutiveField for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn real_sign(&self) -> i32 {
        sign_of(self)
    }
}

pub(crate) fn sign_of<T: Signed>(v: &T) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Integer with exact conversion to rationals.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form of a rational: `p` or `p/q` in lowest terms.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // Scale down huge numerators/denominators together so the division stays finite.
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    while n.bits() > 1000 || d.bits() > 1000 {
        n >>= 64;
        d >>= 64;
        if d.is_zero() {
            return if n.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
    }
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

/// Number representing `value / 2` exactly; used for averaged signatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn mean(a: i64, b: i64) -> Self {
        HalfInt(a + b)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub fn to_rational(self) -> BigRational {
        ratio(self.0, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::str::FromStr for HalfInt {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = parse_rational(s).ok_or_else(|| format!("not a rational: {s:?}"))?;
        let twice = r * rat(2);
        if !twice.is_integer() {
            return Err(format!("{s:?} is not a multiple of 1/2"));
        }
        twice
            .to_integer()
            .to_i64()
            .map(HalfInt)
            .ok_or_else(|| format!("{s:?} out of range"))
    }
}

impl serde::Serialize for HalfInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for HalfInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
