//! Simsek numbers `y₁(n,k;λ)`, degenerate Simsek numbers `y₁(n,k;λ|α)`, and
//! the new-type degenerate Simsek numbers `y*₁,α(n,k;λ)`, the coefficients
//! of
//!
//! ```text
//! F_k(t; α, λ) = (λe^t + 1)_{k,α} / k! = Σ_n y*₁,α(n,k;λ) t^n/n!
//! ```
//!
//! `y*` is computed by six independent routes ([`Route`]) which must agree
//! exactly as polynomials in λ and α. Route A (series extraction) is the
//! definition; the others are verification surfaces.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{ParamPoly, Rational, TruncSeries, Var};
use crate::classical::{
    binomial_q, degenerate_falling, factorial_q, inv_factorial, stirling1_q, BernoulliCache,
};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Route {
    /// Series extraction from `F_k`.
    A,
    /// Explicit formula through `S₁(k,ℓ)` and `(λe^t+1)^ℓ`.
    B,
    /// Explicit formula through the degenerate Vandermonde split.
    C,
    /// Higher-order Bernoulli numbers.
    D,
    /// Recurrence in `k`.
    E,
    /// Recurrence in `n`.
    F,
}

impl Route {
    pub const ALL: [Route; 6] = [Route::A, Route::B, Route::C, Route::D, Route::E, Route::F];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Route::A => 'A',
            Route::B => 'B',
            Route::C => 'C',
            Route::D => 'D',
            Route::E => 'E',
            Route::F => 'F',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Route::A),
            "B" => Ok(Route::B),
            "C" => Ok(Route::C),
            "D" => Ok(Route::D),
            "E" => Ok(Route::E),
            "F" => Ok(Route::F),
            _ => Err(Error::Usage(format!("unknown route `{s}` (expected A..F)"))),
        }
    }
}

fn lambda() -> ParamPoly {
    ParamPoly::lambda()
}

fn alpha() -> ParamPoly {
    ParamPoly::alpha()
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn delta(n: usize) -> ParamPoly {
    if n == 0 {
        ParamPoly::one()
    } else {
        ParamPoly::zero()
    }
}

/// `j^n` with `0^0 = 1`.
fn int_pow(j: usize, n: usize) -> Rational {
    q(j as i64).pow(n as u32)
}

/// `λ^j · c`
fn lambda_pow(j: usize, c: Rational) -> ParamPoly {
    ParamPoly::monomial(c, j as u32, 0)
}

/// `α^j · c`
fn alpha_pow(j: usize, c: Rational) -> ParamPoly {
    ParamPoly::monomial(c, 0, j as u32)
}

/// Simsek number `y₁(n,k;λ) = (1/k!) Σ_j C(k,j) j^n λ^j`.
pub fn simsek_y1(n: usize, k: usize) -> ParamPoly {
    (0..=k)
        .map(|j| lambda_pow(j, &binomial_q(k as u32, j as u32) * &int_pow(j, n)))
        .sum::<ParamPoly>()
        .scale(&inv_factorial(k as u32))
}

/// Degenerate Simsek number `y₁(n,k;λ|α)` via the Stirling-first-kind sum.
pub fn deg_simsek_y1(n: usize, k: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for m in 0..=n {
        let s1 = stirling1_q(n, m);
        if s1.is_zero() {
            continue;
        }
        for j in 0..=k {
            let c = &(&binomial_q(k as u32, j as u32) * &int_pow(j, m)) * &s1;
            acc = acc + ParamPoly::monomial(c, j as u32, (n - m) as u32);
        }
    }
    acc.scale(&inv_factorial(k as u32))
}

/// Degenerate Simsek number via `α^n (j/α)_n = Π_{i<n} (j - iα)`.
pub fn deg_simsek_y1_product(n: usize, k: usize) -> ParamPoly {
    (0..=k)
        .map(|j| {
            let jp = ParamPoly::from_int(j as i64);
            &lambda_pow(j, binomial_q(k as u32, j as u32)) * &degenerate_falling(&jp, n as u32, &alpha())
        })
        .sum::<ParamPoly>()
        .scale(&inv_factorial(k as u32))
}

/// `λe^t + 1` to order `order` with symbolic λ.
fn lambda_exp_plus_one(order: usize) -> TruncSeries<ParamPoly> {
    TruncSeries::from_fn(Var::T, order, |i| {
        let l = lambda().scale(&inv_factorial(i as u32));
        if i == 0 {
            l + ParamPoly::one()
        } else {
            l
        }
    })
}

/// `F_k(t;α,λ)` to order `order`, coefficient `n` equal to `y*₁,α(n,k;λ)/n!`.
pub fn y1star_gf_coeffs(k: usize, order: usize) -> TruncSeries<ParamPoly> {
    let c = lambda_exp_plus_one(order);
    let a = TruncSeries::constant(Var::T, order, alpha());
    degenerate_falling(&c, k as u32, &a).scale(&inv_factorial(k as u32))
}

/// `F_k` through the Bernoulli-polynomial representation
/// `(α^k/k!)·B_k^{(k+1)}((λe^t+1)/α + 1)` at a nonzero rational α.
pub fn y1star_gf_bernoulli(k: usize, order: usize, alpha0: &Rational) -> Result<TruncSeries<ParamPoly>> {
    let inv = alpha0
        .recip()
        .ok_or_else(|| Error::Domain("Bernoulli representation needs alpha != 0".into()))?;
    let arg = lambda_exp_plus_one(order).scale(&inv) + TruncSeries::constant(Var::T, order, ParamPoly::one());
    let poly = crate::classical::bernoulli_poly(k, k as u32 + 1);
    Ok(poly
        .eval(&arg)
        .scale(&(&alpha0.pow(k as u32) * &inv_factorial(k as u32))))
}

fn route_a_column(k: usize, n_max: usize) -> Vec<ParamPoly> {
    y1star_gf_coeffs(k, n_max)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&factorial_q(n as u32)))
        .collect()
}

fn route_b(n: usize, k: usize) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for l in 0..=k {
        let s1 = stirling1_q(k, l);
        if s1.is_zero() {
            continue;
        }
        for j in 0..=l {
            let c = &(&binomial_q(l as u32, j as u32) * &s1) * &int_pow(j, n);
            acc = acc + ParamPoly::monomial(c, j as u32, (k - l) as u32);
        }
    }
    acc.scale(&inv_factorial(k as u32))
}

/// Route C with the rising-index falling factorial supplied by
/// `one_falling(m, j)`; the correct reading is `(1)_{m,α}`.
fn route_c_with(n: usize, k: usize, one_falling: impl Fn(usize, usize) -> ParamPoly) -> ParamPoly {
    let mut acc = ParamPoly::zero();
    for l in 0..=k {
        let outer = binomial_q(k as u32, l as u32);
        for j in 0..=l {
            let s1 = stirling1_q(l, j);
            if s1.is_zero() {
                continue;
            }
            let c = &(&outer * &s1) * &int_pow(j, n);
            let term = ParamPoly::monomial(c, j as u32, (l - j) as u32);
            acc = acc + &term * &one_falling(k - l, j);
        }
    }
    acc.scale(&inv_factorial(k as u32))
}

fn route_c(n: usize, k: usize) -> ParamPoly {
    route_c_with(n, k, |m, _| degenerate_falling(&ParamPoly::one(), m as u32, &alpha()))
}

/// Route C read with `(1)_{k-ℓ, j}` (step `j` instead of α) in place of
/// `(1)_{k-ℓ, α}`. Kept to report whether that reading agrees.
pub fn route_c_step_j(n: usize, k: usize) -> ParamPoly {
    route_c_with(n, k, |m, j| {
        degenerate_falling(&ParamPoly::one(), m as u32, &ParamPoly::from_int(j as i64))
    })
}

fn route_d(n: usize, k: usize, bernoulli: &BernoulliCache) -> ParamPoly {
    if k == 0 {
        return delta(n);
    }
    let mut acc = ParamPoly::zero();
    for j in 0..=k {
        // C(k,j)·(j/k) = C(k-1,j-1)
        let weight = &(&binomial_q(k as u32, j as u32) * &Rational::new(j as i64, k as i64))
            * bernoulli.number(k - j, k as u32);
        if weight.is_zero() {
            continue;
        }
        let inner: ParamPoly = (0..=j)
            .map(|l| lambda_pow(l, &binomial_q(j as u32, l as u32) * &int_pow(l, n)))
            .sum();
        acc = acc + &alpha_pow(k - j, weight) * &inner;
    }
    acc.scale(&inv_factorial(k as u32))
}

/// `(λ+1)_{k,α}/k!`, the `t = 0` value of `F_k`.
pub fn y1star_row_zero(k: usize) -> ParamPoly {
    let c = &lambda() + &ParamPoly::one();
    degenerate_falling(&c, k as u32, &alpha()).scale(&inv_factorial(k as u32))
}

/// Triangle `cells[n][k] = y*₁,α(n,k;λ)` computed by one route.
#[derive(Clone, Debug, PartialEq)]
pub struct SimsekTriangle {
    route: Route,
    cells: Vec<Vec<ParamPoly>>,
}

impl SimsekTriangle {
    pub fn compute(route: Route, n_max: usize, k_max: usize, exec: Exec) -> Self {
        let cells = match route {
            Route::A => {
                let columns = exec.map_range(k_max + 1, |k| route_a_column(k, n_max));
                transpose(columns, n_max)
            }
            Route::B => cellwise(exec, n_max, k_max, route_b),
            Route::C => cellwise(exec, n_max, k_max, route_c),
            Route::D => {
                let bernoulli = BernoulliCache::new(k_max, k_max as u32);
                cellwise(exec, n_max, k_max, |n, k| route_d(n, k, &bernoulli))
            }
            Route::E => transpose(route_e_columns(exec, n_max, k_max), n_max),
            Route::F => transpose(route_f_columns(exec, n_max, k_max), n_max),
        };
        SimsekTriangle { route, cells }
    }

    pub fn route(&self) -> Route {
        self.route
    }

    pub fn n_max(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn k_max(&self) -> usize {
        self.cells[0].len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> &ParamPoly {
        &self.cells[n][k]
    }

    pub fn rows(&self) -> &[Vec<ParamPoly>] {
        &self.cells
    }

    /// First `(n, k)` where the two triangles differ, over their common range.
    pub fn first_difference(&self, other: &SimsekTriangle) -> Option<(usize, usize)> {
        let n_max = self.n_max().min(other.n_max());
        let k_max = self.k_max().min(other.k_max());
        (0..=n_max)
            .flat_map(|n| (0..=k_max).map(move |k| (n, k)))
            .find(|&(n, k)| self.get(n, k) != other.get(n, k))
    }
}

fn cellwise(
    exec: Exec,
    n_max: usize,
    k_max: usize,
    f: impl Fn(usize, usize) -> ParamPoly + Sync + Send,
) -> Vec<Vec<ParamPoly>> {
    let cells: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=k_max).map(move |k| (n, k)))
        .collect();
    let flat = exec.map(cells, |(n, k)| f(n, k));
    flat.chunks(k_max + 1).map(<[ParamPoly]>::to_vec).collect()
}

fn transpose(columns: Vec<Vec<ParamPoly>>, n_max: usize) -> Vec<Vec<ParamPoly>> {
    (0..=n_max)
        .map(|n| columns.iter().map(|col| col[n].clone()).collect())
        .collect()
}

/// `y*(n,k+1) = (λ Σ_ℓ C(n,ℓ) y*(ℓ,k) + (1-kα) y*(n,k)) / (k+1)`
fn route_e_columns(exec: Exec, n_max: usize, k_max: usize) -> Vec<Vec<ParamPoly>> {
    let mut columns: Vec<Vec<ParamPoly>> = vec![(0..=n_max).map(delta).collect()];
    for k in 0..k_max {
        let prev = &columns[k];
        let damp = &ParamPoly::one() - &alpha().scale(&q(k as i64));
        let inv = Rational::new(1, k as i64 + 1);
        let next = exec.map_range(n_max + 1, |n| {
            let conv: ParamPoly = (0..=n)
                .map(|l| prev[l].scale(&binomial_q(n as u32, l as u32)))
                .sum();
            (&(&lambda() * &conv) + &(&damp * &prev[n])).scale(&inv)
        });
        columns.push(next);
    }
    columns
}

/// `y*(n+1,k) = (λ/k) Σ_j C(n,j)(y*(j,k-1) + y*(j+1,k-1)) + ((1+α-kα)/k) y*(n+1,k-1)`
/// seeded by `y*(n,0) = δ_{n,0}` and `y*(0,k) = (λ+1)_{k,α}/k!`.
fn route_f_columns(exec: Exec, n_max: usize, k_max: usize) -> Vec<Vec<ParamPoly>> {
    let mut columns: Vec<Vec<ParamPoly>> = vec![(0..=n_max).map(delta).collect()];
    for k in 1..=k_max {
        let prev = &columns[k - 1];
        let inv_k = Rational::new(1, k as i64);
        let factor = (&ParamPoly::one() + &alpha().scale(&q(1 - k as i64))).scale(&inv_k);
        let lam_k = lambda().scale(&inv_k);
        let mut next = vec![y1star_row_zero(k)];
        next.extend(exec.map_range(n_max, |n| {
            let conv: ParamPoly = (0..=n)
                .map(|j| (&prev[j] + &prev[j + 1]).scale(&binomial_q(n as u32, j as u32)))
                .sum();
            &(&lam_k * &conv) + &(&factor * &prev[n + 1])
        }));
        columns.push(next);
    }
    columns
}

fn triangle_cache() -> &'static RwLock<HashMap<Route, Arc<SimsekTriangle>>> {
    static CACHE: OnceLock<RwLock<HashMap<Route, Arc<SimsekTriangle>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared triangle covering at least `n_max × k_max` for `route`; grows the
/// cached triangle when a larger bound is requested.
///
/// The triangle is built without holding the lock: the build itself runs on
/// the rayon pool, and a worker blocked on the lock could otherwise be the
/// one the build is waiting for.
pub fn cached_triangle(route: Route, n_max: usize, k_max: usize) -> Arc<SimsekTriangle> {
    let cache = triangle_cache();
    let (n_max, k_max) = match cache.read().expect("cache poisoned").get(&route) {
        Some(t) if t.n_max() >= n_max && t.k_max() >= k_max => return Arc::clone(t),
        Some(t) => (t.n_max().max(n_max), t.k_max().max(k_max)),
        None => (n_max, k_max),
    };
    let built = Arc::new(SimsekTriangle::compute(route, n_max, k_max, Exec::default()));
    let mut guard = cache.write().expect("cache poisoned");
    match guard.get(&route) {
        Some(t) if t.n_max() >= n_max && t.k_max() >= k_max => Arc::clone(t),
        _ => {
            guard.insert(route, Arc::clone(&built));
            built
        }
    }
}

/// `y*₁,α(n,k;λ)` by the chosen route.
pub fn y1star(n: usize, k: usize, route: Route) -> ParamPoly {
    cached_triangle(route, n, k).get(n, k).clone()
}

/// Route-A values at a rational parameter point: `grid[n][k]` for
/// `n ≤ n_max`, `k ≤ k_max`.
pub fn y1star_grid_at(n_max: usize, k_max: usize, lambda0: &Rational, alpha0: &Rational) -> Vec<Vec<Rational>> {
    let one = TruncSeries::constant(Var::T, n_max, Rational::one());
    let c = TruncSeries::exp_linear(Var::T, n_max, &Rational::one()).scale(lambda0) + one.clone();
    let mut falling = one;
    let mut columns = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        if k > 0 {
            let shift = TruncSeries::constant(Var::T, n_max, alpha0 * &q(k as i64 - 1));
            falling = falling * (c.clone() - shift);
        }
        let kf = inv_factorial(k as u32);
        columns.push(
            falling
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, v)| &(v * &kf) * &factorial_q(n as u32))
                .collect::<Vec<_>>(),
        );
    }
    (0..=n_max)
        .map(|n| columns.iter().map(|col| col[n].clone()).collect())
        .collect()
}
