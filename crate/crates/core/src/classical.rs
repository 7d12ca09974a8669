//! Classical special numbers: Stirling numbers of both kinds, falling
//! factorials, and Bernoulli numbers and polynomials of higher order.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Rational, Ring, TruncSeries, UniPoly, Var};

/// Default bound of the shared Stirling tables; larger requests build a
/// fresh table.
const SHARED_STIRLING_BOUND: usize = 64;

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_bigint(factorial(n))
}

pub fn binomial_q(n: u32, k: u32) -> Rational {
    Rational::from_bigint(binomial(n, k))
}

/// `1/n!`
pub fn inv_factorial(n: u32) -> Rational {
    Rational::one() / factorial_q(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Signed, `(x)_n = Σ_k S₁(n,k) x^k`.
    First,
    /// `x^n = Σ_k S₂(n,k) (x)_k`.
    Second,
}

/// Memoized triangle `S(n,k)` for `0 ≤ k ≤ n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind, n_max: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
            let row = (0..=n)
                .map(|k| {
                    let diag = if k == 0 { BigInt::zero() } else { at(k - 1) };
                    match kind {
                        StirlingKind::Second => diag + BigInt::from(k) * at(k),
                        StirlingKind::First => diag - BigInt::from(n - 1) * at(k),
                    }
                })
                .collect();
            rows.push(row);
        }
        StirlingTriangle { kind, rows }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside `0 ≤ k ≤ n`; panics if `n > n_max`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        assert!(n <= self.n_max(), "row {n} beyond triangle bound {}", self.n_max());
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

fn shared(kind: StirlingKind) -> &'static StirlingTriangle {
    static FIRST: OnceLock<StirlingTriangle> = OnceLock::new();
    static SECOND: OnceLock<StirlingTriangle> = OnceLock::new();
    let cell = match kind {
        StirlingKind::First => &FIRST,
        StirlingKind::Second => &SECOND,
    };
    cell.get_or_init(|| StirlingTriangle::new(kind, SHARED_STIRLING_BOUND))
}

fn stirling(kind: StirlingKind, n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n <= SHARED_STIRLING_BOUND {
        shared(kind).get(n, k)
    } else {
        StirlingTriangle::new(kind, n).get(n, k)
    }
}

/// Stirling number of the second kind.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    stirling(StirlingKind::Second, n, k)
}

/// Signed Stirling number of the first kind.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    stirling(StirlingKind::First, n, k)
}

pub fn stirling2_q(n: usize, k: usize) -> Rational {
    Rational::from_bigint(stirling2(n, k))
}

pub fn stirling1_q(n: usize, k: usize) -> Rational {
    Rational::from_bigint(stirling1(n, k))
}

/// `(x)_n = x(x-1)...(x-n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial<R: Ring>(x: &R, n: u32) -> R {
    let mut acc = x.one_like();
    for i in 0..n {
        acc = acc * (x.clone() - x.constant_like(&Rational::from_int(i as i64)));
    }
    acc
}

/// `(x)_{n,α} = x(x-α)...(x-(n-1)α)`, with `(x)_{0,α} = 1`.
pub fn degenerate_falling<R: Ring>(x: &R, n: u32, alpha: &R) -> R {
    let mut acc = x.one_like();
    for i in 0..n {
        acc = acc * (x.clone() - alpha.scale(&Rational::from_int(i as i64)));
    }
    acc
}

/// `(t/(e^t-1))` to order `order`.
fn bernoulli_base_series(order: usize) -> TruncSeries<Rational> {
    // (e^t - 1)/t has coefficients 1/(i+1)!
    let quotient = TruncSeries::from_fn(Var::T, order, |i| inv_factorial(i as u32 + 1));
    quotient.reciprocal().expect("unit constant term")
}

/// Bernoulli number of order `order`: `B_index^{(order)} = index!·[t^index] (t/(e^t-1))^order`.
pub fn bernoulli_number(index: usize, order: u32) -> Rational {
    let base = bernoulli_base_series(index);
    &base.pow(order).coeffs()[index] * &factorial_q(index as u32)
}

/// `B_index^{(order)}(x) = Σ_j C(index,j) B_{index-j}^{(order)} x^j`.
pub fn bernoulli_poly(index: usize, order: u32) -> UniPoly {
    let numbers = bernoulli_number_column(index, order);
    UniPoly::new(
        (0..=index)
            .map(|j| &binomial_q(index as u32, j as u32) * &numbers[index - j])
            .collect(),
    )
}

/// `B_index^{(order)}(x)` evaluated at a ring element.
pub fn bernoulli_poly_eval<R: Ring>(index: usize, order: u32, x: &R) -> R {
    bernoulli_poly(index, order).eval(x)
}

/// `[B_0^{(order)}, ..., B_{n_max}^{(order)}]`.
fn bernoulli_number_column(n_max: usize, order: u32) -> Vec<Rational> {
    let powered = bernoulli_base_series(n_max).pow(order);
    powered
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c * &factorial_q(i as u32))
        .collect()
}

/// Precomputed Bernoulli numbers `B_n^{(k)}` and polynomials `B_n^{(k)}(x)`
/// for `n ≤ index_max`, `k ≤ order_max`. Immutable once built.
#[derive(Clone, Debug)]
pub struct BernoulliCache {
    /// `numbers[k][n] = B_n^{(k)}`
    numbers: Vec<Vec<Rational>>,
    /// `polys[k][n] = B_n^{(k)}(x)`
    polys: Vec<Vec<UniPoly>>,
}

impl BernoulliCache {
    pub fn new(index_max: usize, order_max: u32) -> Self {
        let base = bernoulli_base_series(index_max);
        let mut power = TruncSeries::constant(Var::T, index_max, Rational::one());
        let mut numbers = Vec::with_capacity(order_max as usize + 1);
        for k in 0..=order_max {
            if k > 0 {
                power = power.try_mul(&base).expect("same shape");
            }
            numbers.push(
                power
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &factorial_q(i as u32))
                    .collect::<Vec<_>>(),
            );
        }
        let polys = numbers
            .iter()
            .map(|col| {
                (0..=index_max)
                    .map(|n| {
                        UniPoly::new(
                            (0..=n)
                                .map(|j| &binomial_q(n as u32, j as u32) * &col[n - j])
                                .collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        BernoulliCache { numbers, polys }
    }

    pub fn index_max(&self) -> usize {
        self.numbers[0].len() - 1
    }

    pub fn order_max(&self) -> u32 {
        self.numbers.len() as u32 - 1
    }

    /// `B_index^{(order)}`
    pub fn number(&self, index: usize, order: u32) -> &Rational {
        &self.numbers[order as usize][index]
    }

    /// `B_index^{(order)}(x)`
    pub fn poly(&self, index: usize, order: u32) -> &UniPoly {
        &self.polys[order as usize][index]
    }
}
