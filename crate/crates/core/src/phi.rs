//! The ordinary generating function
//!
//! ```text
//! φ*_n(x|α,λ) = Σ_k y*₁,α(n,k;λ) x^k
//! ```
//!
//! as a truncated series at a rational parameter point, and checks of the
//! identities it satisfies. Every check compares two independently
//! assembled series coefficient by coefficient and reports the first
//! mismatch.

use std::time::Instant;

use crate::algebra::{Rational, TruncSeries, UniPoly, Var};
use crate::classical::{binomial_q, factorial_q, stirling2_q};
use crate::degenerate::apostol_euler_column;
use crate::error::{Error, Result};
use crate::report::{IdentityReport, Mismatch, Point, Status};
use crate::simsek::{simsek_y1, y1star_grid_at};

pub const EGF: &str = "PHI-EGF";
pub const LOG_SUBSTITUTION: &str = "PHI-LOG";
pub const RECURRENCE: &str = "PHI-REC";
pub const DERIVATIVE: &str = "PHI-DER";
pub const APOSTOL: &str = "PHI-AE";
pub const INTEGRAL: &str = "PHI-INT";
pub const F_TRANSFORM: &str = "PHI-FT";

type Series = TruncSeries<Rational>;

/// `φ*_n` truncated at `x^order` for one parameter point.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiSeries {
    pub n: usize,
    pub lambda: Rational,
    pub alpha: Rational,
    pub series: Series,
}

pub fn phi_series(n: usize, lambda: &Rational, alpha: &Rational, order: usize) -> PhiSeries {
    let table = PhiTable::new(n, order, order, lambda, alpha);
    PhiSeries {
        n,
        lambda: lambda.clone(),
        alpha: alpha.clone(),
        series: table.phi(n),
    }
}

/// Values `y*₁,α(n,k;λ)` at a rational point for `n ≤ n_max`, `k ≤ k_max`,
/// with `φ*_n` read off at x-order `order ≤ k_max`.
#[derive(Clone, Debug)]
pub struct PhiTable {
    lambda: Rational,
    alpha: Rational,
    order: usize,
    grid: Vec<Vec<Rational>>,
}

impl PhiTable {
    pub fn new(n_max: usize, order: usize, k_max: usize, lambda: &Rational, alpha: &Rational) -> Self {
        let k_max = k_max.max(order);
        PhiTable {
            lambda: lambda.clone(),
            alpha: alpha.clone(),
            order,
            grid: y1star_grid_at(n_max, k_max, lambda, alpha),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn n_max(&self) -> usize {
        self.grid.len() - 1
    }

    /// `y*₁,α(n,k;λ)` at the table's point.
    pub fn value(&self, n: usize, k: usize) -> &Rational {
        &self.grid[n][k]
    }

    pub fn phi(&self, n: usize) -> Series {
        TruncSeries::from_fn(Var::X, self.order, |k| self.grid[n][k].clone())
    }

    fn point(&self) -> Point {
        Point::rational(self.lambda.clone(), self.alpha.clone())
    }

    /// `Σ_ℓ C(n,ℓ) φ*_ℓ`
    fn binomial_sum(&self, n: usize) -> Series {
        (0..=n).fold(self.zero(), |acc, l| {
            acc + self.phi(l).scale(&binomial_q(n as u32, l as u32))
        })
    }

    fn zero(&self) -> Series {
        TruncSeries::zero(Var::X, self.order, &Rational::zero())
    }

    /// `1 + αx`
    fn one_plus_alpha_x(&self, order: usize) -> Series {
        let mut s = TruncSeries::constant(Var::X, order, Rational::one());
        if order >= 1 {
            s = s + TruncSeries::identity(Var::X, order, &Rational::zero()).scale(&self.alpha);
        }
        s
    }

    /// `log(1+αx)/α`, or `x` at α = 0.
    fn log_factor(&self, order: usize) -> Series {
        let x = TruncSeries::identity(Var::X, order, &Rational::zero());
        match self.alpha.recip() {
            None => x,
            Some(inv) => x
                .scale(&self.alpha)
                .log1p()
                .expect("zero constant term")
                .scale(&inv),
        }
    }
}

fn first_mismatch(lhs: &Series, rhs: &Series, prefix: &str) -> Option<Mismatch> {
    lhs.first_mismatch(rhs)
        .map(|(d, a, b)| Mismatch::new(format!("{prefix}x^{d}"), a, b))
}

fn timed(start: Instant, mut report: IdentityReport) -> IdentityReport {
    report.wall_time = start.elapsed();
    report
}

/// `Σ_n φ*_n(x) t^n/n! = e_α^{λe^t+1}(x)` as a series in `x` (order
/// `k_order`) over series in `t` (order `t_order`). The right side is built
/// as `exp((λe^t+1)·log(1+αx)/α)`.
pub fn check_egf(t_order: usize, k_order: usize, lambda: &Rational, alpha: &Rational) -> IdentityReport {
    let start = Instant::now();
    let table = PhiTable::new(t_order, k_order, k_order, lambda, alpha);

    let lhs: TruncSeries<Series> = TruncSeries::from_fn(Var::X, k_order, |k| {
        TruncSeries::from_fn(Var::T, t_order, |n| {
            table.value(n, k) / &factorial_q(n as u32)
        })
    });

    let c = TruncSeries::exp_linear(Var::T, t_order, &Rational::one()).scale(lambda)
        + TruncSeries::constant(Var::T, t_order, Rational::one());
    let log_factor = table.log_factor(k_order);
    let exponent: TruncSeries<Series> =
        TruncSeries::from_fn(Var::X, k_order, |k| c.scale(&log_factor.coeffs()[k]));
    let rhs = exponent.exp().expect("zero constant term in x");

    let mismatch = lhs.first_mismatch(&rhs).map(|(k, a, b)| {
        let (n, ca, cb) = a.first_mismatch(b).expect("differing series");
        Mismatch::new(format!("x^{k} t^{n}"), ca, cb)
    });
    timed(
        start,
        IdentityReport::from_outcome(EGF, table.point(), mismatch, Status::Fail)
            .with_order("t", t_order)
            .with_order("x", k_order),
    )
}

/// `φ*_n(x|α,λ) = Σ_k (log(1+αx)/α)^k y₁(n,k;λ)`, the right side by series
/// composition. At α = 0 the substitution is the identity.
pub fn check_log_substitution(n: usize, order: usize, lambda: &Rational, alpha: &Rational) -> IdentityReport {
    let start = Instant::now();
    let point = Point::rational(lambda.clone(), alpha.clone());
    if alpha.is_zero() {
        return timed(
            start,
            IdentityReport::new(LOG_SUBSTITUTION, point, Status::TriviallyTrue)
                .with_order("x", order)
                .with_note("alpha = 0: substitution is the identity"),
        );
    }
    let table = PhiTable::new(n, order, order, lambda, alpha);
    let lhs = table.phi(n);
    let zero = Rational::zero();
    let simsek_column = TruncSeries::from_fn(Var::X, order, |k| simsek_y1(n, k).eval(lambda, &zero));
    let rhs = simsek_column
        .compose(&table.log_factor(order))
        .expect("inner series has zero constant term");
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    timed(
        start,
        IdentityReport::from_outcome(LOG_SUBSTITUTION, point, mismatch, Status::Fail).with_order("x", order),
    )
}

/// `φ*_{n+1} = (λ/α) log(1+αx) Σ_ℓ C(n,ℓ) φ*_ℓ`
pub fn check_phi_recurrence(n: usize, order: usize, lambda: &Rational, alpha: &Rational) -> IdentityReport {
    let start = Instant::now();
    let table = PhiTable::new(n + 1, order, order, lambda, alpha);
    let lhs = table.phi(n + 1);
    let rhs = (table.log_factor(order) * table.binomial_sum(n)).scale(lambda);
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    timed(
        start,
        IdentityReport::from_outcome(RECURRENCE, table.point(), mismatch, Status::Fail).with_order("x", order),
    )
}

/// `(1+αx)·dφ*_n/dx = λ Σ_ℓ C(n,ℓ) φ*_ℓ + φ*_n`, compared to `x^{order-1}`.
pub fn check_phi_derivative(n: usize, order: usize, lambda: &Rational, alpha: &Rational) -> Result<IdentityReport> {
    if order == 0 {
        return Err(Error::Precondition("derivative check needs order >= 1".into()));
    }
    let start = Instant::now();
    let table = PhiTable::new(n, order, order, lambda, alpha);
    let low = order - 1;
    let lhs = table.one_plus_alpha_x(low) * table.phi(n).derivative();
    let rhs = (table.binomial_sum(n).scale(lambda) + table.phi(n)).truncate(low);
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    Ok(timed(
        start,
        IdentityReport::from_outcome(DERIVATIVE, table.point(), mismatch, Status::Fail).with_order("x", order),
    ))
}

/// `(1+αx) Σ_m C(n,m) E^{(1)}_{n-m}(λ|0) dφ*_m/dx = 2 φ*_n`, compared to
/// `x^{order-1}`.
pub fn check_phi_apostol(n: usize, order: usize, lambda: &Rational, alpha: &Rational) -> Result<IdentityReport> {
    if order == 0 {
        return Err(Error::Precondition("Apostol-Euler check needs order >= 1".into()));
    }
    let start = Instant::now();
    let euler = apostol_euler_column(n, 1, lambda, &Rational::zero())?;
    let table = PhiTable::new(n, order, order, lambda, alpha);
    let low = order - 1;
    let sum = (0..=n).fold(TruncSeries::zero(Var::X, low, &Rational::zero()), |acc, m| {
        let w = &binomial_q(n as u32, m as u32) * &euler[n - m];
        acc + table.phi(m).derivative().scale(&w)
    });
    let lhs = table.one_plus_alpha_x(low) * sum;
    let rhs = table.phi(n).scale(&Rational::from_int(2)).truncate(low);
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    Ok(timed(
        start,
        IdentityReport::from_outcome(APOSTOL, table.point(), mismatch, Status::Fail).with_order("x", order),
    ))
}

/// Which antiderivative divisor the integral check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralForm {
    /// Divisor `λe^t + 1`, through `E^{(1)}_m(λ|0)`; exact only at α = 0.
    Stated,
    /// Divisor `λe^t + 1 + α`, the exact antiderivative of `e_α^c(y)`.
    Corrected,
}

/// `∫₀^x φ*_n(y) dy` against
/// `((1+αx)/2) Σ_l C(n,l) E^{(1)}_{n-l}(λ|0) φ*_l(x) - E^{(1)}_n(λ|0)/2`
/// (stated form) or against the same expression with
/// `G_m = m![t^m] 1/(λe^t+1+α)` in place of `E^{(1)}_m(λ|0)/2` (corrected
/// form). A stated-form mismatch at α ≠ 0 is reported as an expected
/// discrepancy.
pub fn check_phi_integral(
    n: usize,
    order: usize,
    lambda: &Rational,
    alpha: &Rational,
    form: IntegralForm,
) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::Precondition("integral identity is stated for n >= 1".into()));
    }
    let start = Instant::now();
    let weights: Vec<Rational> = match form {
        IntegralForm::Stated => apostol_euler_column(n, 1, lambda, &Rational::zero())?
            .into_iter()
            .map(|e| &e / &Rational::from_int(2))
            .collect(),
        IntegralForm::Corrected => {
            let shifted = TruncSeries::exp_linear(Var::T, n, &Rational::one()).scale(lambda)
                + TruncSeries::constant(Var::T, n, &Rational::one() + alpha);
            let inv = shifted.reciprocal().map_err(|_| {
                Error::Domain("corrected integral needs lambda + 1 + alpha != 0".into())
            })?;
            inv.coeffs()
                .iter()
                .enumerate()
                .map(|(m, c)| c * &factorial_q(m as u32))
                .collect()
        }
    };
    let table = PhiTable::new(n, order, order, lambda, alpha);
    let lhs = table.phi(n).integral().truncate(order);
    let sum = (0..=n).fold(table.zero(), |acc, l| {
        let w = &binomial_q(n as u32, l as u32) * &weights[n - l];
        acc + table.phi(l).scale(&w)
    });
    let rhs = table.one_plus_alpha_x(order) * sum
        - TruncSeries::constant(Var::X, order, weights[n].clone());
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    let (id, on_mismatch) = match form {
        IntegralForm::Stated if !alpha.is_zero() => (INTEGRAL.to_string(), Status::ExpectedDiscrepancy),
        IntegralForm::Stated => (INTEGRAL.to_string(), Status::Fail),
        IntegralForm::Corrected => (format!("{INTEGRAL}[corrected]"), Status::Fail),
    };
    let mut report =
        IdentityReport::from_outcome(id, table.point(), mismatch, on_mismatch).with_order("x", order);
    if form == IntegralForm::Corrected {
        report = report.with_note("implementer-derived divisor lambda*e^t + 1 + alpha");
    }
    Ok(timed(start, report))
}

/// Transfer identity for a polynomial weight `f`:
///
/// ```text
/// Σ_m y*(n,m) f(m) x^m
///   = Σ_j C(n,j) Σ_m Σ_{k≤m} S₂(m,k) (x/(1+αx))^k k! [x^m]f · y*(j,k) · φ*_{n-j}(x)
/// ```
pub fn check_f_transform(
    n: usize,
    f: &UniPoly,
    order: usize,
    lambda: &Rational,
    alpha: &Rational,
) -> IdentityReport {
    let start = Instant::now();
    let deg = f.degree().unwrap_or(0);
    let table = PhiTable::new(n, order, deg, lambda, alpha);

    let lhs = TruncSeries::from_fn(Var::X, order, |m| {
        table.value(n, m) * &f.eval(&Rational::from_int(m as i64))
    });

    let ratio = TruncSeries::identity(Var::X, order, &Rational::zero())
        * table.one_plus_alpha_x(order).reciprocal().expect("unit constant term");
    let ratio_powers: Vec<Series> = (0..=deg).map(|k| ratio.pow(k as u32)).collect();
    let mut rhs = table.zero();
    for j in 0..=n {
        // inner(j) = Σ_m [x^m]f Σ_k S₂(m,k) k! y*(j,k) (x/(1+αx))^k
        let mut inner = table.zero();
        for m in 0..=deg {
            let a_m = f.coeff(m);
            if a_m.is_zero() {
                continue;
            }
            for (k, power) in ratio_powers.iter().enumerate().take(m + 1) {
                let w = &(&(&stirling2_q(m, k) * &factorial_q(k as u32)) * &a_m) * table.value(j, k);
                if !w.is_zero() {
                    inner = inner + power.scale(&w);
                }
            }
        }
        rhs = rhs + (inner * table.phi(n - j)).scale(&binomial_q(n as u32, j as u32));
    }
    let mismatch = first_mismatch(&lhs, &rhs, &format!("n={n} "));
    timed(
        start,
        IdentityReport::from_outcome(F_TRANSFORM, table.point(), mismatch, Status::Fail).with_order("x", order),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simsek::{cached_triangle, Route};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn pass(r: &IdentityReport) {
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn phi_series_examples() {
        let p = phi_series(0, &q(0, 1), &q(1, 1), 4);
        assert_eq!(p.series.to_string(), "[1, 1, 0, 0, 0]");
        for n in 0..5 {
            let p = phi_series(n, &q(1, 1), &q(0, 1), 1);
            let d = if n == 0 { 1 } else { 0 };
            assert_eq!(p.series.coeffs(), &[q(d, 1), q(d + 1, 1)]);
        }
        // λ² + λ - αλ/2 at λ = 1, α = 1/2
        assert_eq!(phi_series(1, &q(1, 1), &q(1, 2), 4).series.coeffs()[2], q(7, 4));
    }

    #[test]
    fn phi_coefficients_match_symbolic_values() {
        let t = cached_triangle(Route::A, 6, 8);
        for (l, a) in [(q(2, 3), q(1, 3)), (q(-1, 2), q(3, 5))] {
            for n in 0..=6 {
                let p = phi_series(n, &l, &a, 8);
                for k in 0..=8 {
                    assert_eq!(p.series.coeffs()[k], t.get(n, k).eval(&l, &a));
                }
            }
        }
    }

    #[test]
    fn egf_examples() {
        pass(&check_egf(8, 8, &q(2, 3), &q(1, 3)));
        pass(&check_egf(6, 6, &q(0, 1), &q(0, 1)));
        pass(&check_egf(5, 7, &q(1, 1), &q(0, 1)));
    }

    #[test]
    fn log_substitution_examples() {
        pass(&check_log_substitution(0, 8, &q(1, 1), &q(1, 2)));
        pass(&check_log_substitution(3, 8, &q(1, 2), &q(1, 3)));
        assert_eq!(check_log_substitution(2, 8, &q(1, 1), &q(0, 1)).status, Status::TriviallyTrue);
    }

    #[test]
    fn recurrence_examples() {
        let r = check_phi_recurrence(0, 8, &q(0, 1), &q(1, 2));
        pass(&r);
        pass(&check_phi_recurrence(2, 8, &q(1, 1), &q(1, 2)));
        pass(&check_phi_recurrence(3, 8, &q(1, 1), &q(0, 1)));
    }

    #[test]
    fn derivative_examples() {
        pass(&check_phi_derivative(0, 8, &q(0, 1), &q(0, 1)).unwrap());
        pass(&check_phi_derivative(3, 8, &q(2, 1), &q(1, 4)).unwrap());
        assert!(check_phi_derivative(1, 0, &q(1, 1), &q(0, 1)).is_err());
    }

    #[test]
    fn apostol_examples() {
        pass(&check_phi_apostol(0, 8, &q(0, 1), &q(1, 3)).unwrap());
        pass(&check_phi_apostol(1, 8, &q(1, 1), &q(0, 1)).unwrap());
        pass(&check_phi_apostol(2, 8, &q(1, 3), &q(1, 5)).unwrap());
        assert!(matches!(check_phi_apostol(1, 8, &q(-1, 1), &q(0, 1)), Err(Error::Domain(_))));
    }

    #[test]
    fn integral_examples() {
        pass(&check_phi_integral(1, 8, &q(1, 1), &q(0, 1), IntegralForm::Stated).unwrap());
        let r = check_phi_integral(1, 8, &q(1, 1), &q(1, 2), IntegralForm::Stated).unwrap();
        assert_eq!(r.status, Status::ExpectedDiscrepancy);
        assert!(r.mismatch.is_some());
        pass(&check_phi_integral(1, 8, &q(1, 1), &q(1, 2), IntegralForm::Corrected).unwrap());
        assert!(matches!(
            check_phi_integral(0, 8, &q(1, 1), &q(0, 1), IntegralForm::Stated),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn integral_constant_term_vanishes_at_alpha_zero() {
        for n in 1..=4 {
            let r = check_phi_integral(n, 0, &q(3, 2), &q(0, 1), IntegralForm::Stated).unwrap();
            pass(&r);
        }
    }

    #[test]
    fn f_transform_examples() {
        pass(&check_f_transform(2, &UniPoly::one(), 8, &q(1, 2), &q(1, 3)));
        pass(&check_f_transform(0, &UniPoly::x(), 6, &q(1, 1), &q(0, 1)));
        pass(&check_f_transform(2, &UniPoly::from_ints(&[0, 0, 1]), 8, &q(1, 2), &q(1, 3)));
        pass(&check_f_transform(3, &UniPoly::from_ints(&[0, -2, 0, 1]), 8, &q(2, 3), &q(1, 3)));
    }
}
