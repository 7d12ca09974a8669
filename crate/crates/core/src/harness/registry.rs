use std::fmt;

use crate::algebra::{Rational, UniPoly};
use crate::error::Result;
use crate::phi::{self, IntegralForm};
use crate::report::{IdentityReport, Point};
use crate::simsek::Route;

use super::checks;

/// Where an entry runs: once over symbolic λ and α, or at each rational
/// grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Rational,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic n,k<=order",
            Mode::Rational => "rational grid",
        })
    }
}

/// Status the entry is expected to report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Pass,
    /// Pass at α = 0, expected discrepancy elsewhere.
    PassAtAlphaZero,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expected::Pass => "pass",
            Expected::PassAtAlphaZero => "pass at alpha=0, expected-discrepancy otherwise",
        })
    }
}

/// Knobs shared by every check of a suite run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Series order in t and x, and the index bound of symbolic checks.
    pub order: usize,
    /// φ* checks run for `n ≤ phi_rows`.
    pub phi_rows: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { order: 8, phi_rows: 4 }
    }
}

type Check = fn(&SuiteConfig, &Point) -> Result<Vec<IdentityReport>>;

pub struct Entry {
    pub id: &'static str,
    pub description: &'static str,
    /// The identity in formula form.
    pub anchor: &'static str,
    pub mode: Mode,
    pub expected: Expected,
    /// Parameter values at which the identity is undefined.
    pub excludes: fn(&Point) -> bool,
    check: Check,
}

impl Entry {
    pub fn applies_at(&self, point: &Point) -> bool {
        !(self.excludes)(point)
    }

    /// Run the check at `point`: the entry's own report first, then any
    /// variant reports.
    pub fn run(&self, config: &SuiteConfig, point: &Point) -> Result<Vec<IdentityReport>> {
        (self.check)(config, point)
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Entry").field("id", &self.id).finish_non_exhaustive()
    }
}

fn nothing(_: &Point) -> bool {
    false
}

fn lambda_minus_one(p: &Point) -> bool {
    p.lambda.as_ref() == Some(&Rational::from_int(-1))
}

fn lambda_zero(p: &Point) -> bool {
    p.lambda.as_ref().is_none_or(Rational::is_zero)
}

fn params(p: &Point) -> (Rational, Rational) {
    let l = p.lambda.clone().expect("rational-mode entry at symbolic point");
    let a = p.alpha.clone().expect("rational-mode entry at symbolic point");
    (l, a)
}

/// One folded report per identity from a row of sub-checks.
fn fold_rows(reports: Vec<IdentityReport>) -> Vec<IdentityReport> {
    IdentityReport::fold(reports).into_iter().collect()
}

fn run_egf(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    Ok(vec![phi::check_egf(c.order, c.order, &l, &a)])
}

fn run_log(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    Ok(fold_rows((0..=c.phi_rows).map(|n| phi::check_log_substitution(n, c.order, &l, &a)).collect()))
}

fn run_rec(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    Ok(fold_rows((0..=c.phi_rows).map(|n| phi::check_phi_recurrence(n, c.order, &l, &a)).collect()))
}

fn run_der(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    let rows = (0..=c.phi_rows)
        .map(|n| phi::check_phi_derivative(n, c.order, &l, &a))
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_rows(rows))
}

fn run_ae(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    let rows = (0..=c.phi_rows)
        .map(|n| phi::check_phi_apostol(n, c.order, &l, &a))
        .collect::<Result<Vec<_>>>()?;
    Ok(fold_rows(rows))
}

fn run_int(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    let rows = |form| {
        (1..=c.phi_rows.max(1))
            .map(|n| phi::check_phi_integral(n, c.order, &l, &a, form))
            .collect::<Result<Vec<_>>>()
    };
    let mut out = fold_rows(rows(IntegralForm::Stated)?);
    if !(&(&l + &Rational::one()) + &a).is_zero() {
        out.extend(fold_rows(rows(IntegralForm::Corrected)?));
    }
    Ok(out)
}

/// Weights `f ∈ {1, x, x², x³ - 2x}` of the transfer identity.
pub fn transfer_weights() -> Vec<UniPoly> {
    vec![
        UniPoly::from_ints(&[1]),
        UniPoly::from_ints(&[0, 1]),
        UniPoly::from_ints(&[0, 0, 1]),
        UniPoly::from_ints(&[0, -2, 0, 1]),
    ]
}

fn run_ft(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    let mut rows = Vec::new();
    for f in transfer_weights() {
        for n in 0..=c.phi_rows {
            let mut r = phi::check_f_transform(n, &f, c.order, &l, &a);
            if let Some(m) = r.mismatch.as_mut() {
                m.location = format!("f={} {}", render_poly(&f), m.location);
            }
            rows.push(r);
        }
    }
    Ok(fold_rows(rows))
}

fn render_poly(f: &UniPoly) -> String {
    let terms: Vec<String> = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn run_s2star(c: &SuiteConfig, p: &Point) -> Result<Vec<IdentityReport>> {
    let (l, a) = params(p);
    Ok(checks::s2star_relation("REL-S2STAR", c.order, &l, &a))
}

pub static REGISTRY: &[Entry] = &[
    Entry {
        id: "FUNC-EQ",
        description: "functional equation of the generating functions F_k",
        anchor: "Σ_ℓ (-1)_{k-ℓ,α} C(k,ℓ) ℓ! F_ℓ(t) = (λe^t)_{k,α}",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::functional_equation("FUNC-EQ", c.order)]),
    },
    Entry {
        id: "THM-S1",
        description: "Stirling-first-kind relation, with its alpha=0 form",
        anchor: "Σ_j α^{k-j} S₁(k,j) λ^j j^n = Σ_ℓ (-1)_{k-ℓ,α} ℓ! C(k,ℓ) y*(n,ℓ)",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(checks::stirling_first_relation("THM-S1", c.order)),
    },
    Entry {
        id: "EXPL-B",
        description: "explicit formula through S₁(k,ℓ)",
        anchor: "y*(n,k) = (1/k!) Σ_ℓ Σ_j C(ℓ,j) α^{k-ℓ} S₁(k,ℓ) λ^j j^n",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::route_equivalence("EXPL-B", Route::B, c.order)]),
    },
    Entry {
        id: "EXPL-C",
        description: "explicit formula through (1)_{k-ℓ,α}; variant [step-j] uses (1)_{k-ℓ,j}",
        anchor: "y*(n,k) = (1/k!) Σ_ℓ Σ_j C(k,ℓ) α^{ℓ-j} λ^j j^n (1)_{k-ℓ,α} S₁(ℓ,j)",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| {
            Ok(vec![
                checks::route_equivalence("EXPL-C", Route::C, c.order),
                checks::printed_route_c("EXPL-C[step-j]", c.order),
            ])
        },
    },
    Entry {
        id: "EXPL-D",
        description: "formula through higher-order Bernoulli numbers",
        anchor: "y*(n,k) = (1/k!) Σ_j α^{k-j} C(k,j) (j/k) B_{k-j}^{(k)} Σ_ℓ C(j,ℓ) λ^ℓ ℓ^n",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::route_equivalence("EXPL-D", Route::D, c.order)]),
    },
    Entry {
        id: "REL-S2A",
        description: "decomposition through degenerate Stirling numbers of the second kind",
        anchor: "y*(n,k) = (1/k!) Σ_ℓ Σ_j S₂,α(k,ℓ) S₁(ℓ,j) j! y₁(n,j)",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::second_kind_decomposition("REL-S2A", c.order)]),
    },
    Entry {
        id: "REL-S2STAR",
        description: "relation to S₂*(n,j|α/λ); variants [k-index], [double-lambda], [zero-convention]",
        anchor: "y*(n,k) = (1/k!) Σ_j C(k,j) j! λ^j (λ+1)_{k-j,α} S₂*(n,j|α/λ)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: lambda_zero,
        check: run_s2star,
    },
    Entry {
        id: "REC-K",
        description: "recurrence in k",
        anchor: "y*(n,k+1) = (λ Σ_m C(n,m) y*(m,k) + (1-kα) y*(n,k)) / (k+1)",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::k_recurrence("REC-K", c.order)]),
    },
    Entry {
        id: "REC-N",
        description: "recurrence in n",
        anchor: "y*(n+1,k) = (λ/k) Σ_j C(n,j)(y*(j,k-1) + y*(j+1,k-1)) + ((1+α-kα)/k) y*(n+1,k-1)",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::n_recurrence("REC-N", c.order)]),
    },
    Entry {
        id: "PHI-EGF",
        description: "exponential generating function of the φ*_n",
        anchor: "Σ_n φ*_n(x) t^n/n! = e_α^{λe^t+1}(x)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: nothing,
        check: run_egf,
    },
    Entry {
        id: "PHI-LOG",
        description: "φ*_n as the Simsek generating function at log(1+αx)/α",
        anchor: "φ*_n(x) = Σ_k (log(1+αx)/α)^k y₁(n,k)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: nothing,
        check: run_log,
    },
    Entry {
        id: "PHI-REC",
        description: "recursion in n for φ*_n",
        anchor: "φ*_{n+1}(x) = (λ/α) log(1+αx) Σ_m C(n,m) φ*_m(x)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: nothing,
        check: run_rec,
    },
    Entry {
        id: "PHI-DER",
        description: "derivative of φ*_n in x",
        anchor: "(1+αx) dφ*_n/dx = λ Σ_m C(n,m) φ*_m(x) + φ*_n(x)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: nothing,
        check: run_der,
    },
    Entry {
        id: "PHI-AE",
        description: "derivative relation with first-order Apostol-Euler numbers",
        anchor: "(1+αx) Σ_m C(n,m) E_{n-m}(λ) dφ*_m/dx = 2 φ*_n(x)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: lambda_minus_one,
        check: run_ae,
    },
    Entry {
        id: "PHI-INT",
        description: "integral of φ*_n for n ≥ 1; variant [corrected] uses divisor λe^t+1+α",
        anchor: "∫₀^x φ*_n = ((1+αx)/2) Σ_m C(n,m) E_{n-m}(λ) φ*_m(x) - E_n(λ)/2",
        mode: Mode::Rational,
        expected: Expected::PassAtAlphaZero,
        excludes: lambda_minus_one,
        check: run_int,
    },
    Entry {
        id: "PHI-FT",
        description: "transfer of a polynomial weight f, f ∈ {1, x, x², x³-2x}",
        anchor: "Σ_m y*(n,m) f(m) x^m = Σ_j C(n,j) Σ_m Σ_k S₂(m,k) (x/(1+αx))^k k! [x^m]f y*(j,k) φ*_{n-j}(x)",
        mode: Mode::Rational,
        expected: Expected::Pass,
        excludes: nothing,
        check: run_ft,
    },
    Entry {
        id: "RED-A0",
        description: "every route and the degenerate Simsek numbers reduce to y₁ at α=0",
        anchor: "y*(n,k)|_{α=0} = y₁(n,k) = (1/k!) Σ_j C(k,j) j^n λ^j",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::alpha_zero_reduction("RED-A0", c.order)]),
    },
    Entry {
        id: "RED-CLASSICAL",
        description: "degenerate Stirling numbers, S₂* and e_α^x(t) at their classical limits",
        anchor: "S₁,α, S₂,α, S₂* at α=0 equal S₁, S₂, S₂; S₁,α, S₂,α at α=1 are δ; e_0^x(t) = e^{xt}",
        mode: Mode::Symbolic,
        expected: Expected::Pass,
        excludes: nothing,
        check: |c, _| Ok(vec![checks::classical_reduction("RED-CLASSICAL", c.order)]),
    },
];

pub fn find(id: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|e| e.id.eq_ignore_ascii_case(id))
}

/// The registry as printable text, one entry per line.
pub fn listing() -> String {
    let mut out = String::new();
    for e in REGISTRY {
        out.push_str(&format!(
            "{:<14} [{}; expected {}]\n    {}\n    {}\n",
            e.id, e.mode, e.expected, e.description, e.anchor
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique_and_ordered() {
        let ids: Vec<&str> = REGISTRY.iter().map(|e| e.id).collect();
        assert_eq!(ids.len(), 18);
        assert_eq!(ids.iter().collect::<HashSet<_>>().len(), 18);
        assert_eq!(ids[0], "FUNC-EQ");
        assert_eq!(ids[17], "RED-CLASSICAL");
    }

    #[test]
    fn exclusions() {
        let p = Point::rational(Rational::from_int(-1), Rational::zero());
        assert!(!find("PHI-AE").unwrap().applies_at(&p));
        assert!(!find("PHI-INT").unwrap().applies_at(&p));
        assert!(find("PHI-EGF").unwrap().applies_at(&p));
        let p = Point::rational(Rational::zero(), Rational::new(1, 2));
        assert!(!find("rel-s2star").unwrap().applies_at(&p));
    }

    #[test]
    fn listing_mentions_every_id() {
        let text = listing();
        assert!(REGISTRY.iter().all(|e| text.contains(e.id)));
    }

    #[test]
    fn poly_rendering() {
        let f = transfer_weights();
        assert_eq!(render_poly(&f[3]), "-2*x + 1*x^3");
        assert_eq!(render_poly(&f[0]), "1");
    }
}
