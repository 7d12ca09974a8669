use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::report::{IdentityReport, Point, Status};

use super::registry::{self, Entry, Mode, SuiteConfig, REGISTRY};

/// Rational-mode points used by every run.
pub fn fixed_points() -> Vec<Point> {
    [(1, 1, 0, 1), (1, 1, 1, 2), (2, 3, 1, 3), (1, 2, 1, 3), (2, 1, 1, 4)]
        .iter()
        .map(|&(ln, ld, an, ad)| Point::rational(Rational::new(ln, ld), Rational::new(an, ad)))
        .collect()
}

/// Rational points for the rational-mode entries: the fixed list followed
/// by `random` seeded points with `|p|, q ≤ 9`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub seed: u64,
    pub random: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { seed: 0, random: 3 }
    }
}

impl GridSpec {
    pub fn fixed_only() -> Self {
        GridSpec { seed: 0, random: 0 }
    }

    pub fn points(&self) -> Vec<Point> {
        let mut points = fixed_points();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let small = |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=9));
        let target = points.len() + self.random;
        while points.len() < target {
            let lambda = small(&mut rng);
            let alpha = small(&mut rng);
            // λ = -1 and λ + 1 + α = 0 would silence the Apostol-Euler and
            // corrected-integral checks.
            if lambda == Rational::from_int(-1) || (&(&lambda + &Rational::one()) + &alpha).is_zero() {
                continue;
            }
            let p = Point::rational(lambda, alpha);
            if !points.contains(&p) {
                points.push(p);
            }
        }
        points
    }
}

/// Resolve an id filter against the registry; unknown ids are a usage error.
pub fn select(filter: Option<&[String]>) -> Result<Vec<&'static Entry>> {
    let Some(ids) = filter else {
        return Ok(REGISTRY.iter().collect());
    };
    let mut wanted = Vec::new();
    for id in ids {
        let entry = registry::find(id.trim())
            .ok_or_else(|| Error::Usage(format!("unknown identity `{id}` (see verify --list)")))?;
        wanted.push(entry.id);
    }
    Ok(REGISTRY.iter().filter(|e| wanted.contains(&e.id)).collect())
}

/// Run the selected entries over the grid. Reports come back in registry
/// order, then point order, independent of `exec`.
pub fn run_suite(
    filter: Option<&[String]>,
    grid: &GridSpec,
    config: &SuiteConfig,
    exec: Exec,
) -> Result<Vec<IdentityReport>> {
    let entries = select(filter)?;
    let points = grid.points();
    let symbolic = [Point::symbolic()];
    let mut work: Vec<(&'static Entry, Point)> = Vec::new();
    for entry in entries {
        let pts: &[Point] = match entry.mode {
            Mode::Symbolic => &symbolic,
            Mode::Rational => &points,
        };
        work.extend(pts.iter().filter(|p| entry.applies_at(p)).map(|p| (entry, p.clone())));
    }
    let results = exec.map(work, |(entry, point)| entry.run(config, &point));
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    Ok(reports)
}

/// Whether the suite succeeded: no report has status `fail`.
pub fn suite_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub expected_discrepancy: usize,
    pub trivially_true: usize,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Summary {
            total: reports.len(),
            ..Summary::default()
        };
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::ExpectedDiscrepancy => s.expected_discrepancy += 1,
                Status::TriviallyTrue => s.trivially_true += 1,
            }
        }
        s
    }
}
