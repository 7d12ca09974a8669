//! Single values and generating series for the command-line front end.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{ParamPoly, Rational, TruncSeries, Var};
use crate::classical::inv_factorial;
use crate::degenerate::{apostol_euler_series, exp_minus_one};
use crate::error::{Error, Result};
use crate::phi::phi_series;
use crate::simsek::{y1star_gf_coeffs, Route};

use super::table::{build_table, Family, TableSpec};

/// One table cell.
pub fn compute_value(spec: &TableSpec, n: usize, k: usize) -> Result<String> {
    let cell = TableSpec {
        n_max: n,
        k_max: k,
        ..spec.clone()
    };
    let table = build_table(&cell)?;
    Ok(table.entries[n][k].clone())
}

/// Generating series that `series` can print, each indexed by `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesFamily {
    /// `(λe^t+1)_{k,α}/k!`
    Y1Star,
    /// `(λe^t+1)^k/k!`
    Y1,
    /// `(e^t-1)_{k,α}/k!`
    S2Star,
    /// `(2/(λe_α(t)+1))^k`, rational parameters only.
    ApostolEuler,
}

impl SeriesFamily {
    const NAMES: [(&'static str, SeriesFamily); 4] = [
        ("y1star", SeriesFamily::Y1Star),
        ("y1", SeriesFamily::Y1),
        ("s2star", SeriesFamily::S2Star),
        ("apostol-euler", SeriesFamily::ApostolEuler),
    ];
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = Self::NAMES.iter().find(|(_, v)| v == self).map(|(n, _)| *n).unwrap_or("?");
        f.write_str(name)
    }
}

impl FromStr for SeriesFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Self::NAMES
            .iter()
            .find(|(n, _)| *n == s)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Usage(format!("unknown series family `{s}` (expected y1star, y1, s2star or apostol-euler)")))
    }
}

/// The generating series of `family` at index `k`, truncated at `t^order`
/// and rendered as `[c0, c1, ...]` (ordinary coefficients).
pub fn generating_series(
    family: SeriesFamily,
    k: usize,
    order: usize,
    lambda: Option<&Rational>,
    alpha: Option<&Rational>,
) -> Result<String> {
    let substitute = |p: &ParamPoly| {
        let p = lambda.map_or_else(|| p.clone(), |l| p.eval_lambda(l));
        alpha.map_or(p.clone(), |a| p.eval_alpha(a))
    };
    let symbolic = match family {
        SeriesFamily::Y1Star => y1star_gf_coeffs(k, order),
        SeriesFamily::Y1 => {
            if alpha.is_some() {
                return Err(Error::Usage("family y1 does not depend on alpha".into()));
            }
            y1star_gf_coeffs(k, order).map(|c| c.eval_alpha(&Rational::zero()))
        }
        SeriesFamily::S2Star => {
            if lambda.is_some() {
                return Err(Error::Usage("family s2star does not depend on lambda".into()));
            }
            let em1 = exp_minus_one(order, &ParamPoly::zero());
            let step = TruncSeries::constant(Var::T, order, ParamPoly::alpha());
            crate::classical::degenerate_falling(&em1, k as u32, &step).scale(&inv_factorial(k as u32))
        }
        SeriesFamily::ApostolEuler => {
            let l = lambda.ok_or_else(|| Error::Usage("apostol-euler needs --lambda".into()))?;
            let zero = Rational::zero();
            let a = alpha.unwrap_or(&zero);
            let k = u32::try_from(k).map_err(|_| Error::Usage("k too large".into()))?;
            return Ok(apostol_euler_series(order, k, l, a)?.to_string());
        }
    };
    Ok(symbolic.map(substitute).to_string())
}

/// `φ*_n` at a rational point, rendered as `[c0, c1, ...]`.
pub fn phi_text(n: usize, lambda: &Rational, alpha: &Rational, degree: usize) -> String {
    phi_series(n, lambda, alpha, degree).series.to_string()
}

/// Parse a route letter for a family; only `y1star` accepts one.
pub fn route_for(family: Family, route: Option<&str>) -> Result<Option<Route>> {
    match route {
        None => Ok(None),
        Some(_) if family != Family::Y1Star => Err(Error::Usage(format!("family {family} has no routes"))),
        Some(r) => Ok(Some(r.parse()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_goldens() {
        let spec = TableSpec {
            route: Some(Route::B),
            ..TableSpec::new(Family::Y1Star, 0, 0)
        };
        assert_eq!(compute_value(&spec, 1, 2).unwrap(), "1*l^2 + 1*l + -1/2*l*a");
        let spec = TableSpec {
            lambda: Some(Rational::one()),
            ..TableSpec::new(Family::Y1, 0, 0)
        };
        assert_eq!(compute_value(&spec, 0, 3).unwrap(), "4/3");
    }

    #[test]
    fn phi_golden() {
        assert_eq!(phi_text(0, &Rational::zero(), &Rational::one(), 4), "[1, 1, 0, 0, 0]");
    }

    #[test]
    fn series_examples() {
        assert_eq!(generating_series(SeriesFamily::Y1Star, 0, 2, None, None).unwrap(), "[1, 0, 0]");
        assert_eq!(
            generating_series(SeriesFamily::Y1Star, 1, 2, None, None).unwrap(),
            "[1*l + 1, 1*l, 1/2*l]"
        );
        let one = Rational::one();
        assert_eq!(
            generating_series(SeriesFamily::S2Star, 1, 3, None, Some(&one)).unwrap(),
            "[0, 1, 1/2, 1/6]"
        );
        assert_eq!(
            generating_series(SeriesFamily::ApostolEuler, 1, 2, Some(&one), None).unwrap(),
            "[1, -1/2, 0]"
        );
        assert!(generating_series(SeriesFamily::ApostolEuler, 1, 2, None, None).is_err());
        assert!("catalan".parse::<SeriesFamily>().is_err());
    }

    #[test]
    fn routes_only_for_y1star() {
        assert!(route_for(Family::Stirling2, Some("A")).is_err());
        assert_eq!(route_for(Family::Y1Star, Some("c")).unwrap(), Some(Route::C));
        assert!(route_for(Family::Y1Star, Some("G")).is_err());
    }
}
