use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{AlgebraError, Rational, Ring};

/// Exponent pair of a monomial `λ^lambda · α^alpha`.
///
/// Ordered canonically: λ-degree descending, then α-degree ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    pub lambda: u32,
    pub alpha: u32,
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .lambda
            .cmp(&self.lambda)
            .then(self.alpha.cmp(&other.alpha))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the two parameters λ and α over the rationals.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ParamPoly::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        ParamPoly::constant(Rational::from_int(n))
    }

    pub fn lambda() -> Self {
        ParamPoly::monomial(Rational::one(), 1, 0)
    }

    pub fn alpha() -> Self {
        ParamPoly::monomial(Rational::one(), 0, 1)
    }

    /// `c · λ^lambda · α^alpha`
    pub fn monomial(c: Rational, lambda: u32, alpha: u32) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Exponents { lambda, alpha }, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms
            .keys()
            .all(|e| e.lambda == 0 && e.alpha == 0)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: u32, alpha: u32) -> Rational {
        self.terms
            .get(&Exponents { lambda, alpha })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0, 0)
    }

    pub fn degree_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.lambda).max()
    }

    pub fn degree_alpha(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.alpha).max()
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let remove = match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing = &*existing + &c;
                existing.is_zero()
            }
            None => {
                self.terms.insert(e, c);
                false
            }
        };
        if remove {
            self.terms.remove(&e);
        }
    }

    /// Exact substitution λ = `lambda`, α = `alpha`.
    pub fn eval(&self, lambda: &Rational, alpha: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(e, c)| c * &(lambda.pow(e.lambda) * alpha.pow(e.alpha)))
            .sum()
    }

    /// Substitute α only, keeping λ symbolic.
    pub fn eval_alpha(&self, alpha: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(
                Exponents {
                    lambda: e.lambda,
                    alpha: 0,
                },
                c * &alpha.pow(e.alpha),
            );
        }
        out
    }

    /// Substitute λ only, keeping α symbolic.
    pub fn eval_lambda(&self, lambda: &Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(
                Exponents {
                    lambda: 0,
                    alpha: e.alpha,
                },
                c * &lambda.pow(e.lambda),
            );
        }
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Rational) -> Rational) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, f(c));
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        self.map_coeffs(|x| x * c)
    }
}

impl fmt::Display for ParamPoly {
    /// Canonical text: `c*l^i*a^j` terms joined by ` + `, `0` for the zero
    /// polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            match e.lambda {
                0 => {}
                1 => write!(f, "*l")?,
                d => write!(f, "*l^{d}")?,
            }
            match e.alpha {
                0 => {}
                1 => write!(f, "*a")?,
                d => write!(f, "*a^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ParamPoly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| AlgebraError::Parse(format!("{why} in polynomial `{s}`"));
        let s = s.trim();
        if s.is_empty() {
            return Err(bad("empty input"));
        }
        let mut out = ParamPoly::zero();
        for term in s.split(" + ") {
            let mut coeff = Rational::one();
            let mut exps = Exponents {
                lambda: 0,
                alpha: 0,
            };
            for (i, factor) in term.trim().split('*').enumerate() {
                let (base, power) = match factor.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "l" => exps.lambda += power,
                    "a" => exps.alpha += power,
                    _ if i == 0 && !factor.contains('^') => coeff = factor.parse()?,
                    _ => return Err(bad("unknown factor")),
                }
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &'a ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.map_coeffs(|c| -c)
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, -c);
        }
        self
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &'a ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &'a ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(
                    Exponents {
                        lambda: ea.lambda + eb.lambda,
                        alpha: ea.alpha + eb.alpha,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for ParamPoly {
    fn sum<I: Iterator<Item = ParamPoly>>(iter: I) -> Self {
        iter.fold(ParamPoly::zero(), |a, b| a + b)
    }
}

impl Ring for ParamPoly {
    fn zero_like(&self) -> Self {
        ParamPoly::zero()
    }

    fn one_like(&self) -> Self {
        ParamPoly::one()
    }

    fn is_zero(&self) -> bool {
        ParamPoly::is_zero(self)
    }

    fn scale(&self, c: &Rational) -> Self {
        ParamPoly::scale(self, c)
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.constant_term().recip().map(ParamPoly::constant)
        } else {
            None
        }
    }

    fn constant_like(&self, c: &Rational) -> Self {
        ParamPoly::constant(c.clone())
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = ParamPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}
