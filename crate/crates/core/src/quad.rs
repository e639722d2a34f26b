//! The quadratic field `F[z] / (z^2 - x z + 1)` for a fixed `x` with
//! `x^2 < 4`, in which `z` is a point of the unit circle with `2 cos θ = x`.
//!
//! Conjugation sends `z` to `z^-1 = x - z`. Elements with `b = 0` are the
//! real ones.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Field, InvolutiveField, Ring};

/// `a + b z`. The modulus `x` is carried by every element with `b != 0`;
/// constants built by `zero()` / `one()` / `from_i64` have no modulus.
#[derive(Clone, Debug)]
pub struct QuadFieldElem<F> {
    a: F,
    b: F,
    x: Option<F>,
}

impl<F: Field> QuadFieldElem<F> {
    pub fn real(a: F) -> Self {
        QuadFieldElem {
            a,
            b: F::zero(),
            x: None,
        }
    }

    /// The generator `z` for the modulus `x`.
    pub fn z(x: F) -> Self {
        QuadFieldElem {
            a: F::zero(),
            b: F::one(),
            x: Some(x),
        }
    }

    pub fn new(a: F, b: F, x: F) -> Self {
        QuadFieldElem { a, b, x: Some(x) }
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn b(&self) -> &F {
        &self.b
    }

    /// `a + b z̄ = (a + bx) - bz`. The base field is taken to be real.
    pub fn conjugate(&self) -> Self {
        match &self.x {
            None => self.clone(),
            Some(x) => QuadFieldElem {
                a: self.a.clone() + self.b.clone() * x.clone(),
                b: -self.b.clone(),
                x: self.x.clone(),
            },
        }
    }

    fn modulus(&self, other: &Self) -> Option<F> {
        self.x.clone().or_else(|| other.x.clone())
    }

    /// `(a + bz)(a + b z̄) = a^2 + abx + b^2`, always in `F`.
    pub fn norm(&self) -> F {
        match &self.x {
            None => self.a.clone() * self.a.clone(),
            Some(x) => {
                self.a.clone() * self.a.clone()
                    + self.a.clone() * self.b.clone() * x.clone()
                    + self.b.clone() * self.b.clone()
            }
        }
    }
}

impl<F: Field> PartialEq for QuadFieldElem<F> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<F: Field> Zero for QuadFieldElem<F> {
    fn zero() -> Self {
        Self::real(F::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<F: Field> One for QuadFieldElem<F> {
    fn one() -> Self {
        Self::real(F::one())
    }
}

impl<F: Field> Add for QuadFieldElem<F> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let x = self.modulus(&rhs);
        QuadFieldElem {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
            x,
        }
    }
}

impl<F: Field> Sub for QuadFieldElem<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        let x = self.modulus(&rhs);
        QuadFieldElem {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
            x,
        }
    }
}

impl<F: Field> Neg for QuadFieldElem<F> {
    type Output = Self;

    fn neg(self) -> Self {
        QuadFieldElem {
            a: -self.a,
            b: -self.b,
            x: self.x,
        }
    }
}

impl<F: Field> Mul for QuadFieldElem<F> {
    type Output = Self;

    // (a + bz)(c + dz) = (ac - bd) + (ad + bc + bdx) z, using z^2 = xz - 1.
    fn mul(self, rhs: Self) -> Self {
        let x = self.modulus(&rhs);
        let bd = self.b.clone() * rhs.b.clone();
        let mut b = self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone();
        if !bd.is_zero() {
            b = b + bd.clone() * x.clone().expect("elements with b != 0 carry a modulus");
        }
        QuadFieldElem {
            a: self.a * rhs.a - bd,
            b,
            x,
        }
    }
}

impl<F: Field> Ring for QuadFieldElem<F> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div(rhs)
    }

    fn from_i64(n: i64) -> Self {
        Self::real(F::from_i64(n))
    }
}

impl<F: Field> Field for QuadFieldElem<F> {
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Some(QuadFieldElem {
            a: c.a * n.clone(),
            b: c.b * n,
            x: c.x,
        })
    }
}

impl<F: InvolutiveField> InvolutiveField for QuadFieldElem<F> {
    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn is_self_conjugate(&self) -> bool {
        self.b.is_zero()
    }

    fn real_sign(&self) -> i32 {
        debug_assert!(self.b.is_zero(), "sign of a non-real element");
        self.a.real_sign()
    }
}
