//! Laurent polynomials in `t` with the involution `t -> t^-1`.
//!
//! The canonical form used for equality "up to units" is
//! [`LaurentPoly::normalize`]: multiply by `±t^k` so the lowest exponent is 0
//! and the leading coefficient is positive.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{write_terms, Poly};
use crate::scalar::Ring;

/// Finitely supported map from exponent to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Ring> LaurentPoly<T> {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut map: BTreeMap<i64, T> = BTreeMap::new();
        for (k, c) in terms {
            let e = map.entry(k).or_insert_with(T::zero);
            *e = e.clone() + c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    pub fn from_i64_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(k, c)| (k, T::from_i64(c))))
    }

    /// Coefficients `coeffs[j]` of `t^(min_exponent + j)`.
    pub fn from_coeffs(min_exponent: i64, coeffs: Vec<T>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(j, c)| (min_exponent + j as i64, c)),
        )
    }

    pub fn from_poly(shift: i64, p: &Poly<T>) -> Self {
        Self::from_coeffs(shift, p.coeffs().to_vec())
    }

    pub fn constant(c: T) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(c: T, k: i64) -> Self {
        Self::from_terms([(k, c)])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn coeff(&self, k: i64) -> T {
        self.terms.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Max exponent minus min exponent.
    pub fn width(&self) -> Result<u64> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => Ok((hi - lo) as u64),
            _ => Err(Error::ZeroPolynomial("width")),
        }
    }

    /// `t -> t^-1`.
    pub fn involution(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.involution() == *self
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `(min_exponent, p)` with `self = t^min_exponent * p(t)`; `(0, 0)` for zero.
    pub fn to_poly(&self) -> (i64, Poly<T>) {
        let lo = self.min_exponent().unwrap_or(0);
        let hi = self.max_exponent().unwrap_or(-1);
        let coeffs = (lo..=hi).map(|k| self.coeff(k)).collect();
        (lo, Poly::new(coeffs))
    }

    pub fn eval(&self, t: &T) -> Option<T>
    where
        T: crate::scalar::Field,
    {
        let (lo, p) = self.to_poly();
        let base = p.eval(t);
        let tk = if lo >= 0 {
            (0..lo).fold(T::one(), |acc, _| acc * t.clone())
        } else {
            let inv = t.inv()?;
            (0..-lo).fold(T::one(), |acc, _| acc * inv.clone())
        };
        Some(base * tk)
    }

    /// Rewrite a self-conjugate Laurent polynomial as a polynomial in
    /// `x = t + t^-1`. Uses `t^k + t^-k = P_k(x)` with `P_0 = 2`, `P_1 = x`,
    /// `P_{k+1} = x P_k - P_{k-1}`.
    pub fn to_x_poly(&self) -> Result<Poly<T>> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSymmetric(format!(
                "{:?}",
                self.terms.keys().collect::<Vec<_>>()
            )));
        }
        let top = self.max_exponent().unwrap_or(0).max(0);
        let mut out = Poly::constant(self.coeff(0));
        let x = Poly::<T>::x();
        let mut prev = Poly::constant(T::from_i64(2));
        let mut cur = x.clone();
        for k in 1..=top {
            out = out + cur.scale(&self.coeff(k));
            let next = x.clone() * cur.clone() - prev;
            prev = cur;
            cur = next;
        }
        Ok(out)
    }
}

impl<T: Ring + Signed> LaurentPoly<T> {
    /// Canonical unit multiple: lowest exponent 0, positive leading coefficient.
    pub fn normalize(&self) -> Result<Self> {
        let lo = self.min_exponent().ok_or(Error::ZeroPolynomial("normalize"))?;
        let shifted = self.shift(-lo);
        let lead_neg = shifted.terms.values().next_back().is_some_and(Signed::is_negative);
        Ok(if lead_neg { -shifted } else { shifted })
    }

    /// Equality in `Z[t, t^-1]` modulo the units `±t^k`.
    pub fn equals_up_to_units(&self, other: &Self) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// The normalized polynomial as an ordinary polynomial in `t`.
    pub fn normalized_poly(&self) -> Result<Poly<T>> {
        Ok(self.normalize()?.to_poly().1)
    }
}

impl<T: Ring> Zero for LaurentPoly<T> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for LaurentPoly<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Add for LaurentPoly<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_terms(self.terms.into_iter().chain(rhs.terms))
    }
}

impl<T: Ring> Sub for LaurentPoly<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Neg for LaurentPoly<T> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<T: Ring> Mul for LaurentPoly<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.push((i + j, a.clone() * b.clone()));
            }
        }
        Self::from_terms(out)
    }
}

impl<T: Ring> Ring for LaurentPoly<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (sa, pa) = self.to_poly();
        let (sb, pb) = rhs.to_poly();
        if pa.is_zero() {
            return (!pb.is_zero()).then(Self::zero);
        }
        pa.exact_div(&pb).map(|q| Self::from_poly(sa - sb, &q))
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(T::from_i64(n))
    }
}

impl<T: Ring + fmt::Display + Signed> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(&k, c)| (k, c.clone())), "t")
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(v: &Value) -> std::result::Result<BigInt, String> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("coefficient {n} is not an integer")),
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("coefficient {s:?} is not an integer")),
        other => Err(format!("coefficient must be an integer, got {other}")),
    }
}

impl LaurentPoly<BigInt> {
    /// JSON object `{"exponent": coefficient}` with string keys.
    pub fn to_json(&self) -> Value {
        Value::Object(
            self.terms
                .iter()
                .map(|(k, c)| (k.to_string(), bigint_to_json(c)))
                .collect(),
        )
    }

    /// Accepts `{"exponent": coefficient, ...}` or
    /// `{"coefficients": [...], "min_exponent": k}`.
    pub fn from_json(v: &Value) -> std::result::Result<Self, String> {
        let obj = v.as_object().ok_or("Laurent polynomial must be a JSON object")?;
        if let Some(arr) = obj.get("coefficients") {
            let arr = arr.as_array().ok_or("\"coefficients\" must be an array")?;
            let min = match obj.get("min_exponent") {
                Some(m) => m.as_i64().ok_or("\"min_exponent\" must be an integer")?,
                None => 0,
            };
            let coeffs = arr
                .iter()
                .map(bigint_from_json)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            return Ok(Self::from_coeffs(min, coeffs));
        }
        let mut terms = Vec::with_capacity(obj.len());
        for (k, c) in obj {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|_| format!("exponent key {k:?} is not an integer"))?;
            terms.push((e, bigint_from_json(c)?));
        }
        Ok(Self::from_terms(terms))
    }
}

impl serde::Serialize for LaurentPoly<BigInt> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly<BigInt> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}
