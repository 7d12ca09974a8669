//! Check procedures behind the registry entries that are not φ* checks.
//!
//! Symbolic checks compare `ParamPoly` values over `0 ≤ n,k ≤ bound`; the
//! `S₂*` relation is checked at rational points because its argument `α/λ`
//! is not polynomial.

use std::time::Instant;

use crate::algebra::{ParamPoly, Rational, TruncSeries, Var};
use crate::classical::{
    binomial_q, degenerate_falling, factorial_q, inv_factorial, stirling1_q, stirling2_q,
};
use crate::degenerate::{deg_exp_series, new_deg_stirling2, DegStirlingKind, DegStirlingTriangle};
use crate::exec::Exec;
use crate::report::{IdentityReport, Mismatch, Point, Status};
use crate::simsek::{
    cached_triangle, deg_simsek_y1, deg_simsek_y1_product, route_c_step_j, simsek_y1,
    y1star_gf_coeffs, y1star_grid_at, y1star_row_zero, Route, SimsekTriangle,
};

fn lambda() -> ParamPoly {
    ParamPoly::lambda()
}

fn alpha() -> ParamPoly {
    ParamPoly::alpha()
}

fn int_pow(j: usize, n: usize) -> Rational {
    Rational::from_int(j as i64).pow(n as u32)
}

/// `(-1)_{m,α}`
fn minus_one_falling(m: usize) -> ParamPoly {
    degenerate_falling(&ParamPoly::from_int(-1), m as u32, &alpha())
}

/// First `(n, k)` in row-major order with `lhs(n,k) != rhs(n,k)`.
fn scan_cells<T: PartialEq + ToString>(
    cells: impl IntoIterator<Item = (usize, usize)>,
    prefix: &str,
    mut lhs: impl FnMut(usize, usize) -> T,
    mut rhs: impl FnMut(usize, usize) -> T,
) -> Option<Mismatch> {
    cells.into_iter().find_map(|(n, k)| {
        let (a, b) = (lhs(n, k), rhs(n, k));
        (a != b).then(|| Mismatch::new(format!("{prefix}n={n} k={k}"), a, b))
    })
}

fn square(bound: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=bound).flat_map(move |n| (0..=bound).map(move |k| (n, k)))
}

fn finish(start: Instant, mut report: IdentityReport, bound: usize) -> IdentityReport {
    report.wall_time = start.elapsed();
    report.with_order("n", bound).with_order("k", bound)
}

fn symbolic(id: &str, mismatch: Option<Mismatch>) -> IdentityReport {
    IdentityReport::from_outcome(id, Point::symbolic(), mismatch, Status::Fail)
}

fn triangle_a(bound: usize) -> std::sync::Arc<SimsekTriangle> {
    cached_triangle(Route::A, bound, bound)
}

/// `Σ_ℓ (-1)_{k-ℓ,α} C(k,ℓ) ℓ! F_ℓ(t) = (λe^t)_{k,α}` for `k ≤ bound`, as
/// series to `t^bound`.
pub fn functional_equation(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let order = bound;
    let lambda_exp = TruncSeries::exp_linear(Var::T, order, &Rational::one()).map(|c| lambda().scale(c));
    let alpha_series = TruncSeries::constant(Var::T, order, alpha());
    let gf: Vec<TruncSeries<ParamPoly>> = (0..=bound).map(|l| y1star_gf_coeffs(l, order)).collect();
    let mismatch = (0..=bound).find_map(|k| {
        let lhs = (0..=k).fold(TruncSeries::zero(Var::T, order, &ParamPoly::zero()), |acc, l| {
            let w = minus_one_falling(k - l).scale(&(&binomial_q(k as u32, l as u32) * &factorial_q(l as u32)));
            acc + gf[l].scale_by(&w)
        });
        let rhs = degenerate_falling(&lambda_exp, k as u32, &alpha_series);
        lhs.first_mismatch(&rhs)
            .map(|(d, a, b)| Mismatch::new(format!("k={k} t^{d}"), a, b))
    });
    let mut report = symbolic(id, mismatch);
    report.wall_time = start.elapsed();
    report.with_order("k", bound).with_order("t", order)
}

/// `Σ_j α^{k-j} S₁(k,j) λ^j j^n = Σ_ℓ (-1)_{k-ℓ,α} ℓ! C(k,ℓ) y*(n,ℓ)` and its
/// α = 0 form `λ^k k^n = Σ_ℓ (-1)^{k-ℓ} C(k,ℓ) ℓ! y₁(n,ℓ)`.
pub fn stirling_first_relation(id: &str, bound: usize) -> Vec<IdentityReport> {
    let start = Instant::now();
    let t = triangle_a(bound);
    let falling: Vec<ParamPoly> = (0..=bound).map(minus_one_falling).collect();
    let mismatch = scan_cells(
        square(bound),
        "",
        |n, k| {
            (0..=k)
                .map(|j| ParamPoly::monomial(&stirling1_q(k, j) * &int_pow(j, n), j as u32, (k - j) as u32))
                .sum::<ParamPoly>()
        },
        |n, k| {
            (0..=k)
                .map(|l| {
                    let w = &binomial_q(k as u32, l as u32) * &factorial_q(l as u32);
                    &falling[k - l] * &t.get(n, l).scale(&w)
                })
                .sum::<ParamPoly>()
        },
    );
    let main = finish(start, symbolic(id, mismatch), bound);

    let start = Instant::now();
    let mismatch = scan_cells(
        square(bound),
        "",
        |n, k| ParamPoly::monomial(int_pow(k, n), k as u32, 0),
        |n, k| {
            (0..=k)
                .map(|l| {
                    let sign = if (k - l) % 2 == 0 { 1 } else { -1 };
                    let w = &(&binomial_q(k as u32, l as u32) * &factorial_q(l as u32)) * &Rational::from_int(sign);
                    simsek_y1(n, l).scale(&w)
                })
                .sum::<ParamPoly>()
        },
    );
    let reduced = finish(start, symbolic(&format!("{id}[alpha=0]"), mismatch), bound);
    vec![main, reduced]
}

/// Route `route` against route A over the square `0 ≤ n,k ≤ bound`.
pub fn route_equivalence(id: &str, route: Route, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let a = triangle_a(bound);
    let other = cached_triangle(route, bound, bound);
    let mismatch = scan_cells(square(bound), &format!("route {route} "), |n, k| other.get(n, k).clone(), |n, k| {
        a.get(n, k).clone()
    });
    finish(start, symbolic(id, mismatch), bound)
}

/// Route C read with step `j` in the falling factorial, against route A.
/// Disagreement is the expected outcome.
pub fn printed_route_c(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let a = triangle_a(bound);
    let mismatch = scan_cells(square(bound), "", route_c_step_j, |n, k| a.get(n, k).clone());
    let report = IdentityReport::from_outcome(id, Point::symbolic(), mismatch, Status::ExpectedDiscrepancy)
        .with_note("falling factorial step j in place of alpha");
    finish(start, report, bound)
}

/// `y*(n,k) = (1/k!) Σ_ℓ Σ_j S₂,α(k,ℓ) S₁(ℓ,j) j! y₁(n,j)`
pub fn second_kind_decomposition(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let a = triangle_a(bound);
    let s2a = DegStirlingTriangle::with_exec(DegStirlingKind::Second, bound, Exec::Sequential);
    let y1: Vec<Vec<ParamPoly>> = (0..=bound).map(|n| (0..=bound).map(|j| simsek_y1(n, j)).collect()).collect();
    let mismatch = scan_cells(
        square(bound),
        "",
        |n, k| a.get(n, k).clone(),
        |n, k| {
            let mut acc = ParamPoly::zero();
            for l in 0..=k {
                let outer = s2a.get(k, l);
                for j in 0..=l {
                    let w = &stirling1_q(l, j) * &factorial_q(j as u32);
                    if !w.is_zero() {
                        acc = acc + &outer * &y1[n][j].scale(&w);
                    }
                }
            }
            acc.scale(&inv_factorial(k as u32))
        },
    );
    finish(start, symbolic(id, mismatch), bound)
}

/// `y*(n,k+1) = (λ Σ_ℓ C(n,ℓ) y*(ℓ,k) + (1-kα) y*(n,k)) / (k+1)` on route-A
/// values, with `y*(n,0) = δ_{n,0}`.
pub fn k_recurrence(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let a = triangle_a(bound);
    let seed = scan_cells((0..=bound).map(|n| (n, 0)), "", |n, k| a.get(n, k).clone(), |n, _| {
        if n == 0 {
            ParamPoly::one()
        } else {
            ParamPoly::zero()
        }
    });
    let step = || {
        scan_cells(
            (0..=bound).flat_map(|n| (1..=bound).map(move |k| (n, k))),
            "",
            |n, k| a.get(n, k).clone(),
            |n, k| {
                let prev = k - 1;
                let conv: ParamPoly = (0..=n)
                    .map(|l| a.get(l, prev).scale(&binomial_q(n as u32, l as u32)))
                    .sum();
                let damp = &ParamPoly::one() - &alpha().scale(&Rational::from_int(prev as i64));
                (&(&lambda() * &conv) + &(&damp * a.get(n, prev))).scale(&Rational::new(1, k as i64))
            },
        )
    };
    finish(start, symbolic(id, seed.or_else(step)), bound)
}

/// `y*(n+1,k) = (λ/k) Σ_j C(n,j)(y*(j,k-1) + y*(j+1,k-1)) + ((1+α-kα)/k) y*(n+1,k-1)`
/// on route-A values, with `y*(0,k) = (λ+1)_{k,α}/k!`.
pub fn n_recurrence(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let a = triangle_a(bound);
    let seed = scan_cells((0..=bound).map(|k| (0, k)), "", |n, k| a.get(n, k).clone(), |_, k| {
        y1star_row_zero(k)
    });
    let step = || {
        scan_cells(
            (1..=bound).flat_map(|n| (1..=bound).map(move |k| (n, k))),
            "",
            |n, k| a.get(n, k).clone(),
            |n, k| {
                let m = n - 1;
                let inv_k = Rational::new(1, k as i64);
                let conv: ParamPoly = (0..=m)
                    .map(|j| (a.get(j, k - 1) + a.get(j + 1, k - 1)).scale(&binomial_q(m as u32, j as u32)))
                    .sum();
                let factor = (&ParamPoly::one() + &alpha().scale(&Rational::from_int(1 - k as i64))).scale(&inv_k);
                &(&lambda().scale(&inv_k) * &conv) + &(&factor * a.get(n, k - 1))
            },
        )
    };
    finish(start, symbolic(id, seed.or_else(step)), bound)
}

/// Every route at α = 0 equals `y₁(n,k;λ)`; the degenerate Simsek numbers at
/// α = 0 equal `y₁` and their two formulas agree.
pub fn alpha_zero_reduction(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let zero = Rational::zero();
    let y1: Vec<Vec<ParamPoly>> = (0..=bound).map(|n| (0..=bound).map(|k| simsek_y1(n, k)).collect()).collect();
    let mut mismatch = Route::ALL.iter().find_map(|&route| {
        let t = cached_triangle(route, bound, bound);
        scan_cells(square(bound), &format!("route {route} "), |n, k| t.get(n, k).eval_alpha(&zero), |n, k| {
            y1[n][k].clone()
        })
    });
    if mismatch.is_none() {
        mismatch = scan_cells(square(bound), "deg-y1 ", |n, k| deg_simsek_y1(n, k).eval_alpha(&zero), |n, k| {
            y1[n][k].clone()
        });
    }
    if mismatch.is_none() {
        mismatch = scan_cells(square(bound), "deg-y1 product ", deg_simsek_y1_product, deg_simsek_y1);
    }
    finish(start, symbolic(id, mismatch), bound)
}

/// Degenerate objects at α = 0 (and α = 1 where the falling factorial
/// becomes the ordinary one) against their classical counterparts.
pub fn classical_reduction(id: &str, bound: usize) -> IdentityReport {
    let start = Instant::now();
    let zero = Rational::zero();
    let one = Rational::one();
    let s1a = DegStirlingTriangle::with_exec(DegStirlingKind::First, bound, Exec::Sequential);
    let s2a = DegStirlingTriangle::with_exec(DegStirlingKind::Second, bound, Exec::Sequential);
    let s2star = DegStirlingTriangle::with_exec(DegStirlingKind::NewSecond, bound, Exec::Sequential);
    let constant = |c: Rational| ParamPoly::constant(c);
    let delta = |n: usize, k: usize| constant(if n == k { one.clone() } else { zero.clone() });

    let mismatch = scan_cells(square(bound), "S1a(alpha=0) ", |n, k| s1a.get(n, k).eval_alpha(&zero), |n, k| {
        constant(stirling1_q(n, k))
    })
    .or_else(|| {
        scan_cells(square(bound), "S2a(alpha=0) ", |n, k| s2a.get(n, k).eval_alpha(&zero), |n, k| {
            constant(stirling2_q(n, k))
        })
    })
    .or_else(|| scan_cells(square(bound), "S2a(alpha=1) ", |n, k| s2a.get(n, k).eval_alpha(&one), delta))
    .or_else(|| scan_cells(square(bound), "S1a(alpha=1) ", |n, k| s1a.get(n, k).eval_alpha(&one), delta))
    .or_else(|| {
        scan_cells(square(bound), "S2*(alpha=0) ", |n, k| s2star.get(n, k).eval_alpha(&zero), |n, k| {
            constant(stirling2_q(n, k))
        })
    })
    .or_else(|| {
        // e_α^x(t) at α = 0 against e^{xt}, with x carried in the λ slot
        let deg = deg_exp_series(&lambda(), &alpha(), bound).map(|c| c.eval_alpha(&zero));
        let classical = TruncSeries::from_fn(Var::T, bound, |n| {
            ParamPoly::monomial(inv_factorial(n as u32), n as u32, 0)
        });
        deg.first_mismatch(&classical)
            .map(|(d, a, b)| Mismatch::new(format!("deg-exp(alpha=0) t^{d}"), a, b))
    });
    finish(start, symbolic(id, mismatch), bound)
}

/// Which form of the `S₂*` relation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum S2StarReading {
    /// `S₂*(n,j|α/λ)` inside the sum, single `λ^j`.
    JIndex,
    /// `S₂*(n,k|α/λ)` outside the summation index.
    KIndex,
    /// `λ^j` applied twice.
    DoubleLambda,
    /// `S₂*(n,0|·) = 0` for every `n`, including `n = 0`.
    ZeroConvention,
}

/// `y*(n,k) = (1/k!) Σ_j C(k,j) j! λ^j (λ+1)_{k-j,α} S₂*(n,j|α/λ)` at a
/// rational point with λ ≠ 0, followed by the three alternative readings.
pub fn s2star_relation(id: &str, bound: usize, lambda0: &Rational, alpha0: &Rational) -> Vec<IdentityReport> {
    let point = Point::rational(lambda0.clone(), alpha0.clone());
    let Some(inv) = lambda0.recip() else {
        return vec![IdentityReport::new(id, point, Status::Fail).with_note("lambda = 0 is excluded")];
    };
    let ratio = alpha0 * &inv;
    let grid = y1star_grid_at(bound, bound, lambda0, alpha0);
    let s2star: Vec<Vec<Rational>> = (0..=bound)
        .map(|n| (0..=bound).map(|j| new_deg_stirling2(n, j, &ratio)).collect())
        .collect();
    let shifted = lambda0 + &Rational::one();
    let rising: Vec<Rational> = (0..=bound)
        .map(|m| degenerate_falling(&shifted, m as u32, alpha0))
        .collect();

    let readings = [
        (S2StarReading::JIndex, None),
        (S2StarReading::KIndex, Some("k-index")),
        (S2StarReading::DoubleLambda, Some("double-lambda")),
        (S2StarReading::ZeroConvention, Some("zero-convention")),
    ];
    readings
        .iter()
        .map(|&(reading, tag)| {
            let start = Instant::now();
            let rhs = |n: usize, k: usize| {
                let sum: Rational = (0..=k)
                    .map(|j| {
                        let s = match reading {
                            S2StarReading::KIndex => s2star[n][k].clone(),
                            S2StarReading::ZeroConvention if j == 0 => Rational::zero(),
                            _ => s2star[n][j].clone(),
                        };
                        let lam = match reading {
                            S2StarReading::DoubleLambda => lambda0.pow(2 * j as u32),
                            _ => lambda0.pow(j as u32),
                        };
                        &(&(&binomial_q(k as u32, j as u32) * &factorial_q(j as u32)) * &lam) * &(&rising[k - j] * &s)
                    })
                    .sum();
                &sum * &inv_factorial(k as u32)
            };
            let mismatch = scan_cells(square(bound), "", |n, k| grid[n][k].clone(), rhs);
            let report = match tag {
                None => IdentityReport::from_outcome(id, point.clone(), mismatch, Status::Fail),
                Some(tag) => IdentityReport::from_outcome(
                    format!("{id}[{tag}]"),
                    point.clone(),
                    mismatch,
                    Status::ExpectedDiscrepancy,
                )
                .with_note("alternative reading"),
            };
            finish(start, report, bound)
        })
        .collect()
}
