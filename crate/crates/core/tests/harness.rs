use proptest::prelude::*;
use simsek_kit::algebra::Rational;
use simsek_kit::exec::Exec;
use simsek_kit::harness::{
    build_table, emit_table, run_suite, suite_passed, Family, Format, GridSpec, NumberTable, SuiteConfig,
    TableSpec,
};
use simsek_kit::report::{Point, Status};
use simsek_kit::simsek::Route;

fn spec() -> impl Strategy<Value = TableSpec> {
    let family = prop::sample::select(Family::ALL.to_vec());
    let route = prop::sample::select(Route::ALL.to_vec());
    let value = (-5i64..=5, 1i64..=5).prop_map(|(n, d)| Rational::new(n, d));
    (family, route, 0usize..6, 0usize..6, prop::option::of(value.clone()), prop::option::of(value)).prop_map(
        |(family, route, n_max, k_max, lambda, alpha)| {
            // keep only the options the family accepts
            let probe = |s: &TableSpec| build_table(s).is_ok();
            let mut s = TableSpec::new(family, n_max, k_max);
            if family == Family::Y1Star {
                s.route = Some(route);
            }
            s.lambda = lambda;
            if !probe(&s) {
                s.lambda = None;
            }
            s.alpha = alpha;
            if !probe(&s) {
                s.alpha = None;
            }
            s
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tables_round_trip(spec in spec(), json in any::<bool>()) {
        let format = if json { Format::Json } else { Format::Csv };
        let text = emit_table(&spec, format).unwrap();
        let parsed = NumberTable::parse(&text, format).unwrap();
        prop_assert_eq!(parsed.render(format).unwrap(), text.clone());
        prop_assert_eq!(parsed.entries.len(), spec.n_max + 1);
        prop_assert!(parsed.entries.iter().all(|r| r.len() == spec.k_max + 1));
        prop_assert_eq!(emit_table(&spec, format).unwrap(), text);
    }
}

#[test]
fn every_route_gives_the_same_table() {
    let base = emit_table(&TableSpec::new(Family::Y1Star, 6, 6), Format::Json).unwrap();
    let strip = |s: &str| s.lines().filter(|l| !l.contains("\"route\"")).collect::<Vec<_>>().join("\n");
    for route in Route::ALL {
        let spec = TableSpec {
            route: Some(route),
            ..TableSpec::new(Family::Y1Star, 6, 6)
        };
        assert_eq!(strip(&emit_table(&spec, Format::Json).unwrap()), strip(&base));
    }
}

#[test]
fn suite_examples() {
    let config = SuiteConfig::default();
    let only = |id: &str| vec![id.to_string()];

    let reports = run_suite(Some(&only("REC-K")), &GridSpec::default(), &config, Exec::default()).unwrap();
    assert!(reports.iter().all(|r| r.status == Status::Pass));

    let reports = run_suite(Some(&only("PHI-INT")), &GridSpec::fixed_only(), &config, Exec::default()).unwrap();
    let status = |alpha: Rational| {
        reports
            .iter()
            .find(|r| r.id == "PHI-INT" && r.point == Point::rational(Rational::one(), alpha.clone()))
            .unwrap()
            .status
    };
    assert_eq!(status(Rational::zero()), Status::Pass);
    assert_eq!(status(Rational::new(1, 2)), Status::ExpectedDiscrepancy);
    assert!(suite_passed(&reports));
}

#[test]
fn full_default_suite_has_no_failures() {
    let reports = run_suite(None, &GridSpec::default(), &SuiteConfig::default(), Exec::default()).unwrap();
    let failures: Vec<String> = reports.iter().filter(|r| r.status == Status::Fail).map(ToString::to_string).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    // one main report per symbolic entry, plus the two symbolic variants
    assert_eq!(reports.iter().filter(|r| r.point.is_symbolic()).count(), 12);
}
