//! Degenerate families: the degenerate exponential, degenerate Stirling
//! numbers of both kinds, the new-type degenerate Stirling numbers
//! `S₂*(n,k|α)`, and degenerate Apostol-Euler numbers.

use crate::algebra::{ParamPoly, Rational, Ring, TruncSeries, Var};
use crate::classical::{degenerate_falling, factorial_q, inv_factorial};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegStirlingKind {
    /// `S₁,α`: `(x)_n = Σ_l S₁,α(n,l) (x)_{l,α}`
    First,
    /// `S₂,α`: `(x)_{n,α} = Σ_l S₂,α(n,l) (x)_l`
    Second,
    /// `S₂*(n,k|α)`: coefficients of `(e^t-1)_{k,α}/k!`
    NewSecond,
}

/// Polynomial in a fresh indeterminate `x` with [`ParamPoly`] coefficients,
/// lowest degree first.
type XPoly = Vec<ParamPoly>;

/// `Π_{i<n} (x - i·step)` in the x-basis.
fn product_basis(n: usize, step: &ParamPoly) -> XPoly {
    let mut p: XPoly = vec![ParamPoly::one()];
    for i in 0..n {
        let shift = step.scale(&Rational::from_int(i as i64));
        let mut next = vec![ParamPoly::zero(); p.len() + 1];
        for (d, c) in p.iter().enumerate() {
            next[d + 1] = &next[d + 1] + c;
            next[d] = &next[d] - &(&shift * c);
        }
        p = next;
    }
    p
}

/// Coordinates of `target` in a basis of monic polynomials `basis[d]` of
/// degree `d`, by peeling off the leading term.
fn triangular_solve(target: &XPoly, basis: &[XPoly]) -> Vec<ParamPoly> {
    let mut rem = target.clone();
    let mut coords = vec![ParamPoly::zero(); target.len()];
    for d in (0..target.len()).rev() {
        let c = rem[d].clone();
        if c.is_zero() {
            continue;
        }
        for (i, b) in basis[d].iter().enumerate() {
            rem[i] = &rem[i] - &(&c * b);
        }
        coords[d] = c;
    }
    debug_assert!(rem.iter().all(ParamPoly::is_zero));
    coords
}

/// Triangle of a degenerate Stirling family with α kept symbolic.
#[derive(Clone, Debug)]
pub struct DegStirlingTriangle {
    kind: DegStirlingKind,
    rows: Vec<Vec<ParamPoly>>,
}

impl DegStirlingTriangle {
    pub fn new(kind: DegStirlingKind, n_max: usize) -> Self {
        Self::with_exec(kind, n_max, Exec::default())
    }

    pub fn with_exec(kind: DegStirlingKind, n_max: usize, exec: Exec) -> Self {
        let alpha = ParamPoly::alpha();
        let one = ParamPoly::one();
        let rows = match kind {
            DegStirlingKind::Second => {
                let classical: Vec<XPoly> = (0..=n_max).map(|l| product_basis(l, &one)).collect();
                exec.map_range(n_max + 1, |n| {
                    triangular_solve(&product_basis(n, &alpha), &classical)
                })
            }
            DegStirlingKind::First => {
                let degenerate: Vec<XPoly> =
                    (0..=n_max).map(|l| product_basis(l, &alpha)).collect();
                exec.map_range(n_max + 1, |n| {
                    triangular_solve(&product_basis(n, &one), &degenerate)
                })
            }
            DegStirlingKind::NewSecond => {
                // not triangular: S₂*(n,k|α) ≠ 0 for 1 ≤ n < k
                let columns = exec.map_range(n_max + 1, |k| s2star_column(k, n_max, &alpha));
                (0..=n_max)
                    .map(|n| columns.iter().map(|col| col[n].clone()).collect())
                    .collect()
            }
        };
        DegStirlingTriangle { kind, rows }
    }

    pub fn kind(&self) -> DegStirlingKind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Zero outside the stored range: `l ≤ n` for the two Stirling kinds,
    /// `l ≤ n_max` for `S₂*`.
    pub fn get(&self, n: usize, l: usize) -> ParamPoly {
        assert!(n <= self.n_max(), "row {n} beyond triangle bound {}", self.n_max());
        self.rows[n].get(l).cloned().unwrap_or_default()
    }
}

/// Degenerate Stirling number of the second kind `S₂,α(n,l)`.
pub fn deg_stirling2(n: usize, l: usize) -> ParamPoly {
    if l > n {
        return ParamPoly::zero();
    }
    DegStirlingTriangle::with_exec(DegStirlingKind::Second, n, Exec::Sequential).get(n, l)
}

/// Degenerate Stirling number of the first kind `S₁,α(n,l)`.
pub fn deg_stirling1(n: usize, l: usize) -> ParamPoly {
    if l > n {
        return ParamPoly::zero();
    }
    DegStirlingTriangle::with_exec(DegStirlingKind::First, n, Exec::Sequential).get(n, l)
}

/// `e^t - 1` to order `order` over the ring of `proto`.
pub fn exp_minus_one<R: Ring>(order: usize, proto: &R) -> TruncSeries<R> {
    TruncSeries::from_fn(Var::T, order, |i| {
        if i == 0 {
            proto.zero_like()
        } else {
            proto.constant_like(&inv_factorial(i as u32))
        }
    })
}

/// `[S₂*(0,k|α), ..., S₂*(n_max,k|α)]`
fn s2star_column<R: Ring>(k: usize, n_max: usize, alpha: &R) -> Vec<R> {
    let em1 = exp_minus_one(n_max, alpha);
    let alpha_series = TruncSeries::constant(Var::T, n_max, alpha.clone());
    let gf = degenerate_falling(&em1, k as u32, &alpha_series).scale(&inv_factorial(k as u32));
    gf.coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c.scale(&factorial_q(n as u32)))
        .collect()
}

/// New-type degenerate Stirling number `S₂*(n,k|α) = n!·[t^n] (e^t-1)_{k,α}/k!`
/// for α symbolic ([`ParamPoly`]) or substituted ([`Rational`]).
///
/// Follows the series: `S₂*(0,0|α) = 1`, and `S₂*(n,k|α)` is generally
/// nonzero for `1 ≤ n < k`, e.g. `S₂*(1,2|α) = -α/2`.
pub fn new_deg_stirling2<R: Ring>(n: usize, k: usize, alpha: &R) -> R {
    s2star_column(k, n, alpha).swap_remove(n)
}

/// `e_α^x(t) = Σ_n (x)_{n,α} t^n/n!` to order `order`.
pub fn deg_exp_series<R: Ring>(x: &R, alpha: &R, order: usize) -> TruncSeries<R> {
    let mut falling = x.one_like();
    TruncSeries::from_fn(Var::T, order, |n| {
        if n > 0 {
            falling = falling.clone() * (x.clone() - alpha.scale(&Rational::from_int(n as i64 - 1)));
        }
        falling.scale(&inv_factorial(n as u32))
    })
}

/// `λ·e_α(t)` inner series: `e_α(t) = (1+αt)^{1/α}` for α ≠ 0, `e^t` for α = 0.
fn degenerate_e(alpha: &Rational, order: usize) -> TruncSeries<Rational> {
    if alpha.is_zero() {
        TruncSeries::exp_linear(Var::T, order, &Rational::one())
    } else {
        deg_exp_series(&Rational::one(), alpha, order)
    }
}

/// Generating series `(2/(λ·e_α(t)+1))^k` to order `order`.
pub fn apostol_euler_series(
    order: usize,
    k: u32,
    lambda: &Rational,
    alpha: &Rational,
) -> Result<TruncSeries<Rational>> {
    if *lambda == Rational::from_int(-1) {
        return Err(Error::Domain(
            "degenerate Apostol-Euler numbers are undefined at lambda = -1".into(),
        ));
    }
    let half = Rational::new(1, 2);
    let denom = (degenerate_e(alpha, order).scale(lambda)
        + TruncSeries::constant(Var::T, order, Rational::one()))
    .scale(&half);
    Ok(denom.reciprocal()?.pow(k))
}

/// `[E_0^{(k)}(λ|α), ..., E_{n_max}^{(k)}(λ|α)]`
pub fn apostol_euler_column(
    n_max: usize,
    k: u32,
    lambda: &Rational,
    alpha: &Rational,
) -> Result<Vec<Rational>> {
    let gf = apostol_euler_series(n_max, k, lambda, alpha)?;
    Ok(gf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * &factorial_q(n as u32))
        .collect())
}

/// Degenerate Apostol-Euler number `E_n^{(k)}(λ|α)`.
pub fn apostol_euler(n: usize, k: u32, lambda: &Rational, alpha: &Rational) -> Result<Rational> {
    Ok(apostol_euler_column(n, k, lambda, alpha)?.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{binomial_q, falling_factorial, stirling1_q, stirling2_q};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn alpha() -> ParamPoly {
        ParamPoly::alpha()
    }

    #[test]
    fn deg_stirling2_examples() {
        for n in 0..6 {
            assert_eq!(deg_stirling2(n, n), ParamPoly::one());
        }
        // x(x-α) = (x)_2 + (1-α)(x)_1, using x^2 = (x)_2 + (x)_1
        assert_eq!(deg_stirling2(2, 1), &ParamPoly::one() - &alpha());
        assert_eq!(deg_stirling2(2, 3), ParamPoly::zero());
    }

    #[test]
    fn deg_stirling1_examples() {
        for n in 0..6 {
            assert_eq!(deg_stirling1(n, n), ParamPoly::one());
        }
        // x(x-1) = x(x-α) + (α-1)x
        assert_eq!(deg_stirling1(2, 1), &alpha() - &ParamPoly::one());
    }

    #[test]
    fn degenerate_triangles_are_mutual_inverses() {
        let n_max = 8;
        let s1 = DegStirlingTriangle::new(DegStirlingKind::First, n_max);
        let s2 = DegStirlingTriangle::new(DegStirlingKind::Second, n_max);
        for n in 0..=n_max {
            for m in 0..=n_max {
                let sum: ParamPoly = (0..=n_max).map(|l| &s1.get(n, l) * &if l <= n_max { s2.get(l, m) } else { ParamPoly::zero() }).sum();
                let expected = if n == m { ParamPoly::one() } else { ParamPoly::zero() };
                assert_eq!(sum, expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn change_of_basis_identities() {
        // The λ slot stands in for the fresh indeterminate x.
        let x = ParamPoly::lambda();
        let a = alpha();
        let n_max = 10;
        let s1 = DegStirlingTriangle::new(DegStirlingKind::First, n_max);
        let s2 = DegStirlingTriangle::new(DegStirlingKind::Second, n_max);
        for n in 0..=n_max {
            let lhs: ParamPoly = (0..=n).map(|l| &s2.get(n, l) * &falling_factorial(&x, l as u32)).sum();
            assert_eq!(lhs, degenerate_falling(&x, n as u32, &a), "S2a n={n}");
            let lhs: ParamPoly = (0..=n).map(|l| &s1.get(n, l) * &degenerate_falling(&x, l as u32, &a)).sum();
            assert_eq!(lhs, falling_factorial(&x, n as u32), "S1a n={n}");
        }
    }

    #[test]
    fn degree_bound_in_alpha() {
        let n_max = 8;
        for kind in [DegStirlingKind::First, DegStirlingKind::Second] {
            let t = DegStirlingTriangle::new(kind, n_max);
            for n in 0..=n_max {
                for l in 0..=n {
                    let p = t.get(n, l);
                    assert!(p.degree_alpha().unwrap_or(0) as usize <= n - l);
                    assert_eq!(p.degree_lambda().unwrap_or(0), 0);
                }
            }
        }
    }

    #[test]
    fn alpha_zero_reproduces_classical() {
        let n_max = 8;
        let z = q(0, 1);
        let s1 = DegStirlingTriangle::new(DegStirlingKind::First, n_max);
        let s2 = DegStirlingTriangle::new(DegStirlingKind::Second, n_max);
        let s2s = DegStirlingTriangle::new(DegStirlingKind::NewSecond, n_max);
        for n in 0..=n_max {
            for l in 0..=n {
                assert_eq!(s1.get(n, l).eval(&z, &z), stirling1_q(n, l));
                assert_eq!(s2.get(n, l).eval(&z, &z), stirling2_q(n, l));
                assert_eq!(s2s.get(n, l).eval(&z, &z), stirling2_q(n, l));
                assert_eq!(new_deg_stirling2(n, l, &z), stirling2_q(n, l));
            }
        }
    }

    #[test]
    fn s2star_examples() {
        for k in 1..6 {
            assert_eq!(new_deg_stirling2(0, k, &alpha()), ParamPoly::zero());
        }
        assert_eq!(new_deg_stirling2(0, 0, &alpha()), ParamPoly::one());
        assert_eq!(new_deg_stirling2(1, 1, &alpha()), ParamPoly::one());
        for n in 1..6 {
            assert_eq!(new_deg_stirling2(n, 0, &alpha()), ParamPoly::zero());
        }
        // (e^t-1)(e^t-1-α)/2 = -αt/2 + ...
        assert_eq!(new_deg_stirling2(1, 2, &alpha()), ParamPoly::monomial(q(-1, 2), 0, 1));
    }

    #[test]
    fn s2star_through_stirling_expansion() {
        // (u)_{k,α} = Σ_m S₁(k,m) α^{k-m} u^m and u^m/m! = Σ_n S₂(n,m) t^n/n!
        let n_max = 8;
        let table = DegStirlingTriangle::new(DegStirlingKind::NewSecond, n_max);
        for n in 0..=n_max {
            for k in 0..=n_max {
                let expected: ParamPoly = (0..=k)
                    .map(|m| {
                        let c = &(&stirling1_q(k, m) * &factorial_q(m as u32)) * &stirling2_q(n, m);
                        ParamPoly::monomial(c, 0, (k - m) as u32)
                    })
                    .sum::<ParamPoly>()
                    .scale(&inv_factorial(k as u32));
                assert_eq!(table.get(n, k), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn s2star_symbolic_matches_rational_extraction() {
        let n_max = 10;
        let table = DegStirlingTriangle::new(DegStirlingKind::NewSecond, n_max);
        for a0 in [q(1, 2), q(-3, 4), q(2, 1), q(5, 7), q(-1, 9), q(7, 3)] {
            for n in 0..=n_max {
                for k in 0..=n_max {
                    assert_eq!(table.get(n, k).eval(&q(0, 1), &a0), new_deg_stirling2(n, k, &a0), "n={n} k={k} a={a0}");
                }
            }
        }
    }

    #[test]
    fn deg_exp_examples() {
        let one = q(1, 1);
        let s = deg_exp_series(&one, &one, 6);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let x = q(3, 2);
        assert_eq!(deg_exp_series(&x, &q(0, 1), 6), TruncSeries::exp_linear(Var::T, 6, &x));
        let zero = deg_exp_series(&q(0, 1), &q(1, 3), 4);
        assert_eq!(zero, TruncSeries::constant(Var::T, 4, q(1, 1)));
    }

    #[test]
    fn deg_exp_is_power_of_binomial() {
        // (1 + αt)^{x/α} = exp((x/α)·log(1+αt))
        let x = q(5, 3);
        let a = q(-2, 7);
        let order = 8;
        let log = TruncSeries::identity(Var::T, order, &q(0, 1)).scale(&a).log1p().unwrap();
        let direct = log.scale(&(&x / &a)).exp().unwrap();
        assert_eq!(deg_exp_series(&x, &a, order), direct);
    }

    #[test]
    fn apostol_euler_examples() {
        for (l, a) in [(q(1, 1), q(0, 1)), (q(2, 3), q(1, 3)), (q(-5, 2), q(2, 1))] {
            for k in 0..4u32 {
                let e0 = apostol_euler(0, k, &l, &a).unwrap();
                assert_eq!(e0, (&q(2, 1) / &(&l + &q(1, 1))).pow(k));
                if k == 0 {
                    for n in 1..5 {
                        assert_eq!(apostol_euler(n, 0, &l, &a).unwrap(), q(0, 1));
                    }
                }
            }
        }
        assert_eq!(apostol_euler(1, 1, &q(1, 1), &q(0, 1)).unwrap(), q(-1, 2));
        assert!(matches!(apostol_euler(2, 1, &q(-1, 1), &q(0, 1)), Err(Error::Domain(_))));
    }

    /// `E_n^{(1)}(λ|0)` from `(λe^t+1)·E(t) = 2`:
    /// `E_n = (2δ_{n0} - λ Σ_{j<n} C(n,j) E_j)/(λ+1)`.
    fn classical_apostol_first_order(n_max: usize, l: &Rational) -> Vec<Rational> {
        let mut e: Vec<Rational> = Vec::new();
        for n in 0..=n_max {
            let mut acc = if n == 0 { q(2, 1) } else { q(0, 1) };
            for (j, ej) in e.iter().enumerate() {
                acc = acc - l * &(&binomial_q(n as u32, j as u32) * ej);
            }
            e.push(&acc / &(l + &q(1, 1)));
        }
        e
    }

    #[test]
    fn apostol_euler_alpha_zero_matches_classical_recurrence() {
        let n_max = 10;
        for l in [q(1, 1), q(2, 3), q(-1, 2), q(3, 1)] {
            let first = classical_apostol_first_order(n_max, &l);
            for k in 0..=3u32 {
                // order k is the k-fold binomial convolution of order 1
                let mut expected = vec![q(0, 1); n_max + 1];
                expected[0] = q(1, 1);
                for _ in 0..k {
                    expected = (0..=n_max)
                        .map(|n| (0..=n).map(|j| &binomial_q(n as u32, j as u32) * &(&expected[j] * &first[n - j])).sum())
                        .collect();
                }
                assert_eq!(apostol_euler_column(n_max, k, &l, &q(0, 1)).unwrap(), expected, "l={l} k={k}");
            }
        }
    }
}
