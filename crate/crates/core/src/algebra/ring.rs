use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// Commutative ring containing the rationals.
///
/// Elements such as truncated series carry shape (variable, order), so the
/// additive and multiplicative identities are produced from an existing
/// element rather than from nothing.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplication by a rational scalar.
    fn scale(&self, c: &Rational) -> Self;

    /// Multiplicative inverse if one exists in the ring.
    fn try_inverse(&self) -> Option<Self>;

    /// The constant `c` embedded in the ring of `self`.
    fn constant_like(&self, c: &Rational) -> Self {
        self.one_like().scale(c)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn try_inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn pow(&self, e: u32) -> Self {
        Rational::pow(self, e)
    }
}
