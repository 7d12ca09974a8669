//! Rectangular `(n, k)` tables of a number family, with CSV and JSON forms
//! that parse back to the same bytes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{ParamPoly, Rational};
use crate::classical::{bernoulli_number, stirling1_q, stirling2_q};
use crate::degenerate::{new_deg_stirling2, DegStirlingKind, DegStirlingTriangle};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::simsek::{cached_triangle, deg_simsek_y1, simsek_y1, Route};

use super::render::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Stirling1,
    Stirling2,
    DegStirling1,
    DegStirling2,
    S2Star,
    /// `B_n^{(k)}`, row `n`, order `k`.
    Bernoulli,
    Y1,
    Y1Deg,
    Y1Star,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Stirling1,
        Family::Stirling2,
        Family::DegStirling1,
        Family::DegStirling2,
        Family::S2Star,
        Family::Bernoulli,
        Family::Y1,
        Family::Y1Deg,
        Family::Y1Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::DegStirling1 => "deg-stirling1",
            Family::DegStirling2 => "deg-stirling2",
            Family::S2Star => "s2star",
            Family::Bernoulli => "bernoulli",
            Family::Y1 => "y1",
            Family::Y1Deg => "y1deg",
            Family::Y1Star => "y1star",
        }
    }

    fn uses_lambda(self) -> bool {
        matches!(self, Family::Y1 | Family::Y1Deg | Family::Y1Star)
    }

    fn uses_alpha(self) -> bool {
        matches!(
            self,
            Family::DegStirling1 | Family::DegStirling2 | Family::S2Star | Family::Y1Deg | Family::Y1Star
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            Error::Usage(format!("unknown family `{s}` (expected one of {})", names.join(", ")))
        })
    }
}

/// What to tabulate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub family: Family,
    pub route: Option<Route>,
    pub n_max: usize,
    pub k_max: usize,
    pub lambda: Option<Rational>,
    pub alpha: Option<Rational>,
}

impl TableSpec {
    pub fn new(family: Family, n_max: usize, k_max: usize) -> Self {
        TableSpec {
            family,
            route: None,
            n_max,
            k_max,
            lambda: None,
            alpha: None,
        }
    }

    fn validate(&self) -> Result<()> {
        let f = self.family;
        if self.route.is_some() && f != Family::Y1Star {
            return Err(Error::Usage(format!("family {f} has no routes")));
        }
        if self.lambda.is_some() && !f.uses_lambda() {
            return Err(Error::Usage(format!("family {f} does not depend on lambda")));
        }
        if self.alpha.is_some() && !f.uses_alpha() {
            return Err(Error::Usage(format!("family {f} does not depend on alpha")));
        }
        Ok(())
    }

    fn substitute(&self, p: ParamPoly) -> ParamPoly {
        let p = match &self.lambda {
            Some(l) => p.eval_lambda(l),
            None => p,
        };
        match &self.alpha {
            Some(a) => p.eval_alpha(a),
            None => p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberTable {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<String>,
    pub n_max: usize,
    pub k_max: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<String>,
    pub version: String,
    /// `entries[n][k]` in canonical text.
    pub entries: Vec<Vec<String>>,
}

/// Build the table described by `spec`.
pub fn build_table(spec: &TableSpec) -> Result<NumberTable> {
    spec.validate()?;
    let (n_max, k_max) = (spec.n_max, spec.k_max);
    let side = n_max.max(k_max);
    let rational = |v: Rational| v.to_string();
    let poly = |p: ParamPoly| spec.substitute(p).to_string();
    let grid = |f: &dyn Fn(usize, usize) -> String| -> Vec<Vec<String>> {
        (0..=n_max).map(|n| (0..=k_max).map(|k| f(n, k)).collect()).collect()
    };
    let entries = match spec.family {
        Family::Stirling1 => grid(&|n, k| rational(stirling1_q(n, k))),
        Family::Stirling2 => grid(&|n, k| rational(stirling2_q(n, k))),
        Family::DegStirling1 | Family::DegStirling2 | Family::S2Star => {
            let kind = match spec.family {
                Family::DegStirling1 => DegStirlingKind::First,
                Family::DegStirling2 => DegStirlingKind::Second,
                _ => DegStirlingKind::NewSecond,
            };
            match (&spec.alpha, kind) {
                (Some(a), DegStirlingKind::NewSecond) => grid(&|n, k| rational(new_deg_stirling2(n, k, a))),
                _ => {
                    let t = DegStirlingTriangle::with_exec(kind, side, Exec::default());
                    grid(&|n, k| poly(t.get(n, k)))
                }
            }
        }
        Family::Bernoulli => grid(&|n, k| rational(bernoulli_number(n, k as u32))),
        Family::Y1 => grid(&|n, k| poly(simsek_y1(n, k))),
        Family::Y1Deg => grid(&|n, k| poly(deg_simsek_y1(n, k))),
        Family::Y1Star => {
            let t = cached_triangle(spec.route.unwrap_or(Route::A), n_max, k_max);
            grid(&|n, k| poly(t.get(n, k).clone()))
        }
    };
    Ok(NumberTable {
        family: spec.family.name().to_string(),
        route: (spec.family == Family::Y1Star).then(|| spec.route.unwrap_or(Route::A).to_string()),
        n_max,
        k_max,
        lambda: spec.lambda.as_ref().map(ToString::to_string),
        alpha: spec.alpha.as_ref().map(ToString::to_string),
        version: env!("CARGO_PKG_VERSION").to_string(),
        entries,
    })
}

/// `emit_table`: build and serialize in one step.
pub fn emit_table(spec: &TableSpec, format: Format) -> Result<String> {
    build_table(spec)?.render(format)
}

impl NumberTable {
    pub fn get(&self, n: usize, k: usize) -> Option<&str> {
        self.entries.get(n)?.get(k).map(String::as_str)
    }

    fn metadata(&self) -> Vec<(&'static str, String)> {
        let mut meta = vec![("family", self.family.clone())];
        if let Some(r) = &self.route {
            meta.push(("route", r.clone()));
        }
        meta.push(("n_max", self.n_max.to_string()));
        meta.push(("k_max", self.k_max.to_string()));
        if let Some(l) = &self.lambda {
            meta.push(("lambda", l.clone()));
        }
        if let Some(a) = &self.alpha {
            meta.push(("alpha", a.clone()));
        }
        meta.push(("version", self.version.clone()));
        meta
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv | Format::Text => {
                let mut out = String::new();
                for (key, value) in self.metadata() {
                    out.push_str(&format!("# {key}={value}\n"));
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| Error::Io(e.to_string());
                w.write_record(["n", "k", "value"]).map_err(io)?;
                for (n, row) in self.entries.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        w.write_record([n.to_string().as_str(), &k.to_string(), v]).map_err(io)?;
                    }
                }
                let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
                out.push_str(&String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))?);
                Ok(out)
            }
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        let table = match format {
            Format::Json => serde_json::from_str(text).map_err(|e| Error::Usage(format!("bad table json: {e}")))?,
            Format::Csv | Format::Text => Self::parse_csv(text)?,
        };
        table.check_shape()?;
        Ok(table)
    }

    fn parse_csv(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Usage(format!("bad table csv: {msg}"));
        let mut table = NumberTable {
            family: String::new(),
            route: None,
            n_max: 0,
            k_max: 0,
            lambda: None,
            alpha: None,
            version: String::new(),
            entries: Vec::new(),
        };
        for line in text.lines().take_while(|l| l.starts_with('#')) {
            let (key, value) = line[1..]
                .trim()
                .split_once('=')
                .ok_or_else(|| bad(format!("metadata line `{line}`")))?;
            let number = |v: &str| v.parse::<usize>().map_err(|e| bad(format!("{key}: {e}")));
            match key {
                "family" => table.family = value.to_string(),
                "route" => table.route = Some(value.to_string()),
                "n_max" => table.n_max = number(value)?,
                "k_max" => table.k_max = number(value)?,
                "lambda" => table.lambda = Some(value.to_string()),
                "alpha" => table.alpha = Some(value.to_string()),
                "version" => table.version = value.to_string(),
                _ => return Err(bad(format!("unknown metadata key `{key}`"))),
            }
        }
        table.entries = vec![vec![String::new(); table.k_max + 1]; table.n_max + 1];
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut seen = 0usize;
        for record in reader.records() {
            let record = record.map_err(|e| bad(e.to_string()))?;
            if record.len() != 3 {
                return Err(bad(format!("expected 3 fields, found {}", record.len())));
            }
            let n: usize = record[0].parse().map_err(|e| bad(format!("n: {e}")))?;
            let k: usize = record[1].parse().map_err(|e| bad(format!("k: {e}")))?;
            let cell = table
                .entries
                .get_mut(n)
                .and_then(|row| row.get_mut(k))
                .ok_or_else(|| bad(format!("cell ({n},{k}) outside the declared range")))?;
            *cell = record[2].to_string();
            seen += 1;
        }
        if seen != (table.n_max + 1) * (table.k_max + 1) {
            return Err(bad(format!("expected {} cells, found {seen}", (table.n_max + 1) * (table.k_max + 1))));
        }
        Ok(table)
    }

    fn check_shape(&self) -> Result<()> {
        let rect = self.entries.len() == self.n_max + 1 && self.entries.iter().all(|r| r.len() == self.k_max + 1);
        if rect {
            Ok(())
        } else {
            Err(Error::Usage("table is not rectangular over its declared range".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y1star_golden_entry() {
        let t = build_table(&TableSpec::new(Family::Y1Star, 1, 2)).unwrap();
        assert_eq!(t.get(1, 2), Some("1*l^2 + 1*l + -1/2*l*a"));
        assert_eq!(t.route.as_deref(), Some("A"));
    }

    #[test]
    fn stirling2_golden_entry() {
        let t = build_table(&TableSpec::new(Family::Stirling2, 4, 4)).unwrap();
        assert_eq!(t.get(4, 2), Some("7"));
    }

    #[test]
    fn k0_column_is_delta_for_every_route() {
        for route in Route::ALL {
            let spec = TableSpec {
                route: Some(route),
                ..TableSpec::new(Family::Y1Star, 6, 3)
            };
            let t = build_table(&spec).unwrap();
            for n in 0..=6 {
                assert_eq!(t.get(n, 0), Some(if n == 0 { "1" } else { "0" }));
            }
        }
    }

    #[test]
    fn substitution() {
        let spec = TableSpec {
            lambda: Some(Rational::one()),
            ..TableSpec::new(Family::Y1, 0, 3)
        };
        assert_eq!(build_table(&spec).unwrap().get(0, 3), Some("4/3"));
        let spec = TableSpec {
            alpha: Some(Rational::new(1, 2)),
            ..TableSpec::new(Family::Y1Star, 1, 2)
        };
        assert_eq!(build_table(&spec).unwrap().get(1, 2), Some("1*l^2 + 3/4*l"));
        let spec = TableSpec {
            alpha: Some(Rational::new(1, 2)),
            ..TableSpec::new(Family::S2Star, 4, 4)
        };
        let substituted = build_table(&spec).unwrap();
        let symbolic = build_table(&TableSpec::new(Family::S2Star, 4, 4)).unwrap();
        for n in 0..=4 {
            for k in 0..=4 {
                let p: ParamPoly = symbolic.get(n, k).unwrap().parse().unwrap();
                assert_eq!(substituted.get(n, k).unwrap(), p.eval_alpha(&Rational::new(1, 2)).to_string());
            }
        }
    }

    #[test]
    fn mismatched_options_are_usage_errors() {
        let with_route = TableSpec {
            route: Some(Route::B),
            ..TableSpec::new(Family::Stirling2, 3, 3)
        };
        assert!(matches!(build_table(&with_route), Err(Error::Usage(_))));
        let with_alpha = TableSpec {
            alpha: Some(Rational::one()),
            ..TableSpec::new(Family::Y1, 3, 3)
        };
        assert!(matches!(build_table(&with_alpha), Err(Error::Usage(_))));
        assert!("catalan".parse::<Family>().is_err());
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let specs = [
            TableSpec::new(Family::Y1Star, 4, 5),
            TableSpec {
                lambda: Some(Rational::new(2, 3)),
                ..TableSpec::new(Family::Y1Deg, 3, 3)
            },
            TableSpec::new(Family::Bernoulli, 5, 3),
            TableSpec::new(Family::DegStirling1, 4, 4),
        ];
        for spec in &specs {
            for format in [Format::Csv, Format::Json] {
                let text = emit_table(spec, format).unwrap();
                let back = NumberTable::parse(&text, format).unwrap();
                assert_eq!(back.render(format).unwrap(), text);
                assert_eq!(emit_table(spec, format).unwrap(), text);
            }
        }
    }

    #[test]
    fn csv_layout() {
        let text = emit_table(&TableSpec::new(Family::Stirling1, 1, 1), Format::Csv).unwrap();
        let version = env!("CARGO_PKG_VERSION");
        assert_eq!(
            text,
            format!("# family=stirling1\n# n_max=1\n# k_max=1\n# version={version}\nn,k,value\n0,0,1\n0,1,0\n1,0,0\n1,1,1\n")
        );
    }

    #[test]
    fn malformed_csv_is_rejected() {
        let text = "# family=stirling1\n# n_max=1\n# k_max=1\n# version=0\nn,k,value\n0,0,1\n";
        assert!(NumberTable::parse(text, Format::Csv).is_err());
    }
}
