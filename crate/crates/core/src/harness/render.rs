use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::IdentityReport;

use super::suite::{suite_passed, Summary};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!("unknown format `{s}` (expected text, csv or json)"))),
        }
    }
}

#[derive(Serialize)]
struct SuiteDocument<'a> {
    passed: bool,
    summary: Summary,
    reports: &'a [IdentityReport],
}

fn opt(v: &Option<impl ToString>) -> String {
    v.as_ref().map_or(String::new(), ToString::to_string)
}

/// Render suite reports. Every format is a pure function of the reports.
pub fn render_reports(reports: &[IdentityReport], format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                writeln!(out, "{r}").expect("write to string");
            }
            let s = Summary::of(reports);
            writeln!(
                out,
                "{} reports: {} pass, {} fail, {} expected-discrepancy, {} trivially-true",
                s.total, s.pass, s.fail, s.expected_discrepancy, s.trivially_true
            )
            .expect("write to string");
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "lambda", "alpha", "status", "orders", "location", "lhs", "rhs", "note"])
                .map_err(io)?;
            for r in reports {
                let orders: Vec<String> = r.orders.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let m = r.mismatch.as_ref();
                w.write_record([
                    r.id.as_str(),
                    &opt(&r.point.lambda),
                    &opt(&r.point.alpha),
                    r.status.as_str(),
                    &orders.join(";"),
                    m.map_or("", |m| m.location.as_str()),
                    m.map_or("", |m| m.lhs.as_str()),
                    m.map_or("", |m| m.rhs.as_str()),
                    r.note.as_deref().unwrap_or(""),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Json => {
            let doc = SuiteDocument {
                passed: suite_passed(reports),
                summary: Summary::of(reports),
                reports,
            };
            let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

fn io(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::report::{Mismatch, Point, Status};

    fn sample() -> Vec<IdentityReport> {
        let p = Point::rational(Rational::one(), Rational::new(1, 2));
        let mut r = IdentityReport::new("PHI-INT", p, Status::ExpectedDiscrepancy).with_order("x", 8);
        r.mismatch = Some(Mismatch::new("n=1 x^2", "1/4", "3/8"));
        vec![IdentityReport::new("REC-K", Point::symbolic(), Status::Pass), r]
    }

    #[test]
    fn csv_layout() {
        let out = render_reports(&sample(), Format::Csv).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "id,lambda,alpha,status,orders,location,lhs,rhs,note");
        assert_eq!(lines[1], "REC-K,,,pass,,,,,");
        assert_eq!(lines[2], "PHI-INT,1,1/2,expected-discrepancy,x=8,n=1 x^2,1/4,3/8,");
    }

    #[test]
    fn json_carries_summary() {
        let out = render_reports(&sample(), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["summary"]["expected_discrepancy"], 1);
        assert_eq!(v["reports"][1]["point"]["alpha"], "1/2");
    }

    #[test]
    fn text_ends_with_summary() {
        let out = render_reports(&sample(), Format::Text).unwrap();
        assert!(out.ends_with("2 reports: 1 pass, 0 fail, 1 expected-discrepancy, 0 trivially-true\n"));
        assert!("yaml".parse::<Format>().is_err());
    }
}
