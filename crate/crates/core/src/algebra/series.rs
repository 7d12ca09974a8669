use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Rational, Ring};

/// Name of the formal variable of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    T,
    X,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T => write!(f, "t"),
            Var::X => write!(f, "x"),
        }
    }
}

/// Power series in one variable truncated after the term of degree
/// `order`, with coefficients in an arbitrary [`Ring`].
///
/// The coefficient ring may itself be a series ring, which gives bivariate
/// series in the nesting `x` over `t`.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R> {
    var: Var,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Series whose coefficients are exactly `coeffs`; the order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(var: Var, coeffs: Vec<R>) -> Result<Self, AlgebraError> {
        if coeffs.is_empty() {
            return Err(AlgebraError::EmptySeries);
        }
        Ok(TruncSeries { var, coeffs })
    }

    /// Series of order `order` built from `f(i)` for each degree `i`.
    pub fn from_fn(var: Var, order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncSeries {
            var,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// `proto` supplies the shape of the coefficient ring.
    pub fn zero(var: Var, order: usize, proto: &R) -> Self {
        TruncSeries::from_fn(var, order, |_| proto.zero_like())
    }

    pub fn constant(var: Var, order: usize, c: R) -> Self {
        let zero = c.zero_like();
        let mut s = TruncSeries::zero(var, order, &zero);
        s.coeffs[0] = c;
        s
    }

    /// The series `var` itself (zero at order 0).
    pub fn identity(var: Var, order: usize, proto: &R) -> Self {
        let mut s = TruncSeries::zero(var, order, proto);
        if order >= 1 {
            s.coeffs[1] = proto.one_like();
        }
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Option<&R> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    fn proto(&self) -> &R {
        &self.coeffs[0]
    }

    /// Keep degrees `0..=order`; extends with zeros if `order` exceeds the
    /// current order.
    pub fn truncate(&self, order: usize) -> Self {
        let zero = self.proto().zero_like();
        TruncSeries::from_fn(self.var, order, |i| {
            self.coeffs.get(i).cloned().unwrap_or_else(|| zero.clone())
        })
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }

    /// Multiply every coefficient by the ring element `c`.
    pub fn scale_by(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `self · var^shift`, truncated.
    pub fn shift_up(&self, shift: usize) -> Self {
        let zero = self.proto().zero_like();
        TruncSeries::from_fn(self.var, self.order(), |i| {
            if i >= shift {
                self.coeffs[i - shift].clone()
            } else {
                zero.clone()
            }
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var != other.var {
            return Err(AlgebraError::VariableMismatch(self.var, other.var));
        }
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(TruncSeries::from_fn(self.var, self.order(), |i| {
            self.coeffs[i].clone() + other.coeffs[i].clone()
        }))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        Ok(TruncSeries::from_fn(self.var, self.order(), |i| {
            self.coeffs[i].clone() - other.coeffs[i].clone()
        }))
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        let zero = self.proto().zero_like();
        let mut out = vec![zero; self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..self.coeffs.len() - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a.clone() * b.clone();
                out[i + j] = out[i + j].clone() + term;
            }
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: out,
        })
    }

    fn require_zero_constant(&self, op: &'static str) -> Result<(), AlgebraError> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(AlgebraError::NonZeroConstant(op))
        }
    }

    /// Formal `exp(self)`; the constant term must vanish.
    ///
    /// Uses `n·b_n = Σ_{k=1}^{n} k·a_k·b_{n-k}` from `b' = a'·b`.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        self.require_zero_constant("exp")?;
        let n_max = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n_max + 1);
        b.push(self.proto().one_like());
        for n in 1..=n_max {
            let mut acc = self.proto().zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + (self.coeffs[k].clone() * b[n - k].clone()).scale(&Rational::from_int(k as i64));
            }
            b.push(acc.scale(&Rational::new(1, n as i64)));
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: b,
        })
    }

    /// Formal `log(1 + self)`; the constant term must vanish.
    ///
    /// Uses `(1 + a)·b' = a'`, i.e. `n·b_n = n·a_n - Σ_{k=1}^{n-1} k·b_k·a_{n-k}`.
    pub fn log1p(&self) -> Result<Self, AlgebraError> {
        self.require_zero_constant("log1p")?;
        let n_max = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n_max + 1);
        b.push(self.proto().zero_like());
        for n in 1..=n_max {
            let mut acc = self.coeffs[n].scale(&Rational::from_int(n as i64));
            for k in 1..n {
                acc = acc
                    - (b[k].clone() * self.coeffs[n - k].clone()).scale(&Rational::from_int(k as i64));
            }
            b.push(acc.scale(&Rational::new(1, n as i64)));
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: b,
        })
    }

    /// Multiplicative inverse; the constant term must be invertible in `R`.
    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(AlgebraError::NotInvertible)?;
        let n_max = self.order();
        let mut b: Vec<R> = Vec::with_capacity(n_max + 1);
        b.push(inv0.clone());
        for n in 1..=n_max {
            let mut acc = self.proto().zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * b[n - k].clone();
            }
            b.push(-(inv0.clone() * acc));
        }
        Ok(TruncSeries {
            var: self.var,
            coeffs: b,
        })
    }

    /// `self ∘ inner` by Horner's scheme; `inner` must have zero constant
    /// term, the same variable and the same order.
    pub fn compose(&self, inner: &Self) -> Result<Self, AlgebraError> {
        inner.require_zero_constant("compose")?;
        self.check_compatible(inner)?;
        let n = self.order();
        let mut acc = TruncSeries::constant(self.var, n, self.coeffs[n].clone());
        for i in (0..n).rev() {
            acc = acc.try_mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        Ok(acc)
    }

    /// Formal derivative; the order drops by one (an order-0 series
    /// differentiates to the order-0 zero series).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return TruncSeries::zero(self.var, 0, self.proto());
        }
        TruncSeries::from_fn(self.var, self.order() - 1, |i| {
            self.coeffs[i + 1].scale(&Rational::from_int(i as i64 + 1))
        })
    }

    /// Formal antiderivative with zero constant term; the order rises by one.
    pub fn integral(&self) -> Self {
        let zero = self.proto().zero_like();
        TruncSeries::from_fn(self.var, self.order() + 1, |i| {
            if i == 0 {
                zero.clone()
            } else {
                self.coeffs[i - 1].scale(&Rational::new(1, i as i64))
            }
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TruncSeries::constant(self.var, self.order(), self.proto().one_like());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same shape");
        }
        acc
    }

    /// Index and both values of the first differing coefficient.
    pub fn first_mismatch<'a>(&'a self, other: &'a Self) -> Option<(usize, &'a R, &'a R)> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| (i, a, b))
    }
}

impl TruncSeries<Rational> {
    /// `exp(c·var)` over the rationals.
    pub fn exp_linear(var: Var, order: usize, c: &Rational) -> Self {
        let mut term = Rational::one();
        TruncSeries::from_fn(var, order, |i| {
            if i > 0 {
                term = &(&term * c) / &Rational::from_int(i as i64);
            }
            term.clone()
        })
    }
}

impl<R: Ring> TruncSeries<R> {
    /// `exp(c·var)` with `c` an element of the coefficient ring.
    pub fn exp_scaled(var: Var, order: usize, c: &R) -> Self {
        let mut term = c.one_like();
        TruncSeries::from_fn(var, order, |i| {
            if i > 0 {
                term = (term.clone() * c.clone()).scale(&Rational::new(1, i as i64));
            }
            term.clone()
        })
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncSeries<R> {
    /// `[c0, c1, ..., cN]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<R: fmt::Debug> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.var, self.coeffs)
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods report it.
impl<R: Ring> Add for TruncSeries<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("series shape mismatch")
    }
}

impl<R: Ring> Sub for TruncSeries<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("series shape mismatch")
    }
}

impl<R: Ring> Mul for TruncSeries<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("series shape mismatch")
    }
}

impl<R: Ring> Neg for TruncSeries<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c.clone())
    }
}

impl<R: Ring> Ring for TruncSeries<R> {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.var, self.order(), self.proto())
    }

    fn one_like(&self) -> Self {
        TruncSeries::constant(self.var, self.order(), self.proto().one_like())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn scale(&self, c: &Rational) -> Self {
        TruncSeries::scale(self, c)
    }

    fn try_inverse(&self) -> Option<Self> {
        self.reciprocal().ok()
    }

    fn constant_like(&self, c: &Rational) -> Self {
        TruncSeries::constant(self.var, self.order(), self.proto().constant_like(c))
    }

    fn pow(&self, e: u32) -> Self {
        TruncSeries::pow(self, e)
    }
}
