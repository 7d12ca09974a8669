use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A known mismatch, reported but never failing the suite.
    ExpectedDiscrepancy,
    /// The statement degenerates at this point and holds without computation.
    TriviallyTrue,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::ExpectedDiscrepancy => "expected-discrepancy",
            Status::TriviallyTrue => "trivially-true",
        }
    }

    /// Severity used when folding several sub-checks into one report.
    fn rank(self) -> u8 {
        match self {
            Status::TriviallyTrue => 0,
            Status::Pass => 1,
            Status::ExpectedDiscrepancy => 2,
            Status::Fail => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameter point of a check; `None` components are symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub lambda: Option<Rational>,
    pub alpha: Option<Rational>,
}

impl Point {
    pub fn symbolic() -> Self {
        Point::default()
    }

    pub fn rational(lambda: Rational, alpha: Rational) -> Self {
        Point {
            lambda: Some(lambda),
            alpha: Some(alpha),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        self.lambda.is_none() && self.alpha.is_none()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<Rational>| v.as_ref().map_or("sym".to_string(), ToString::to_string);
        write!(f, "lambda={} alpha={}", show(&self.lambda), show(&self.alpha))
    }
}

/// First differing coefficient, in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Mismatch {
    pub fn new(location: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Mismatch {
            location: location.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one identity check at one parameter point.
///
/// Wall time is kept out of the serialized form so that reports are
/// byte-identical across runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub point: Point,
    pub orders: BTreeMap<String, usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>, point: Point, status: Status) -> Self {
        IdentityReport {
            id: id.into(),
            point,
            orders: BTreeMap::new(),
            status,
            mismatch: None,
            note: None,
            wall_time: Duration::ZERO,
        }
    }

    /// `Pass` when `mismatch` is `None`, otherwise `on_mismatch`.
    pub fn from_outcome(
        id: impl Into<String>,
        point: Point,
        mismatch: Option<Mismatch>,
        on_mismatch: Status,
    ) -> Self {
        let status = if mismatch.is_some() { on_mismatch } else { Status::Pass };
        let mut r = IdentityReport::new(id, point, status);
        r.mismatch = mismatch;
        r
    }

    pub fn with_order(mut self, name: &str, value: usize) -> Self {
        self.orders.insert(name.to_string(), value);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::TriviallyTrue)
    }

    /// Fold sub-check reports (same id and point) into one: the most severe
    /// status wins and its first mismatch is kept; orders are merged.
    pub fn fold(parts: Vec<IdentityReport>) -> Option<IdentityReport> {
        let mut iter = parts.into_iter();
        let mut acc = iter.next()?;
        for r in iter {
            for (k, v) in r.orders {
                acc.orders.entry(k).or_insert(v);
            }
            acc.wall_time += r.wall_time;
            if r.status.rank() > acc.status.rank() {
                acc.status = r.status;
                acc.mismatch = r.mismatch;
                if r.note.is_some() {
                    acc.note = r.note;
                }
            }
        }
        Some(acc)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<22} {:<20} {}", self.status.as_str(), self.id, self.point)?;
        for (k, v) in &self.orders {
            write!(f, " {k}={v}")?;
        }
        if let Some(m) = &self.mismatch {
            write!(f, " | first mismatch at {}: {} != {}", m.location, m.lhs, m.rhs)?;
        }
        if let Some(note) = &self.note {
            write!(f, " | {note}")?;
        }
        Ok(())
    }
}
