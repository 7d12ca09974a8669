use proptest::prelude::*;
use simsek_kit::algebra::{ParamPoly, Rational, TruncSeries, Var};
use simsek_kit::classical::{degenerate_falling, stirling2_q};
use simsek_kit::degenerate::{DegStirlingKind, DegStirlingTriangle};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((rational(), 0u32..4, 0u32..4), 0..5)
        .prop_map(|terms| terms.into_iter().map(|(c, i, j)| ParamPoly::monomial(c, i, j)).sum())
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<Rational>> {
    prop::collection::vec(rational(), order + 1)
        .prop_map(|c| TruncSeries::from_coeffs(Var::T, c).unwrap())
}

fn series_pair(max_order: usize) -> impl Strategy<Value = (TruncSeries<Rational>, TruncSeries<Rational>)> {
    (0..=max_order).prop_flat_map(|n| (series(n), series(n)))
}

/// Orders `m ≤ n ≤ 12` with a series of order `n`.
fn nested_orders() -> impl Strategy<Value = (usize, TruncSeries<Rational>, TruncSeries<Rational>)> {
    (0usize..=12)
        .prop_flat_map(|n| (0..=n, series(n), series(n)))
}

fn without_constant(s: &TruncSeries<Rational>) -> TruncSeries<Rational> {
    let mut c = s.coeffs().to_vec();
    c[0] = Rational::zero();
    TruncSeries::from_coeffs(s.var(), c).unwrap()
}

fn with_unit_constant(s: &TruncSeries<Rational>) -> TruncSeries<Rational> {
    let mut c = s.coeffs().to_vec();
    if c[0].is_zero() {
        c[0] = Rational::one();
    }
    TruncSeries::from_coeffs(s.var(), c).unwrap()
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
        if let Some(inv) = a.recip() {
            prop_assert_eq!(&a * &inv, Rational::one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn param_poly_ring_axioms(a in param_poly(), b in param_poly(), c in param_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn param_poly_eval_is_a_homomorphism(a in param_poly(), b in param_poly(), l in rational(), al in rational()) {
        prop_assert_eq!((&a * &b).eval(&l, &al), &a.eval(&l, &al) * &b.eval(&l, &al));
        prop_assert_eq!((&a + &b).eval(&l, &al), &a.eval(&l, &al) + &b.eval(&l, &al));
        prop_assert_eq!(a.eval_lambda(&l).eval_alpha(&al), ParamPoly::constant(a.eval(&l, &al)));
    }

    #[test]
    fn param_poly_text_round_trip(a in param_poly()) {
        prop_assert_eq!(a.to_string().parse::<ParamPoly>().unwrap(), a);
    }

    #[test]
    fn series_ring_axioms((a, b) in series_pair(8)) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        let one = TruncSeries::constant(Var::T, a.order(), Rational::one());
        prop_assert_eq!(a.clone() * one, a);
    }

    #[test]
    fn truncation_commutes_with_operations((m, a, b) in nested_orders()) {
        prop_assert_eq!((a.clone() * b.clone()).truncate(m), a.truncate(m) * b.truncate(m));
        let a0 = without_constant(&a);
        prop_assert_eq!(a0.exp().unwrap().truncate(m), a0.truncate(m).exp().unwrap());
        prop_assert_eq!(a0.log1p().unwrap().truncate(m), a0.truncate(m).log1p().unwrap());
        let u = with_unit_constant(&b);
        prop_assert_eq!(u.reciprocal().unwrap().truncate(m), u.truncate(m).reciprocal().unwrap());
        prop_assert_eq!(u.compose(&a0).unwrap().truncate(m), u.truncate(m).compose(&a0.truncate(m)).unwrap());
    }

    #[test]
    fn exp_and_log1p_are_inverse(a in (0usize..=10).prop_flat_map(series)) {
        let a0 = without_constant(&a);
        let e = a0.exp().unwrap();
        let one = TruncSeries::constant(Var::T, a.order(), Rational::one());
        prop_assert_eq!((e - one).log1p().unwrap(), a0.clone());
        prop_assert_eq!(a0.log1p().unwrap().exp().unwrap(), a0 + TruncSeries::constant(Var::T, a.order(), Rational::one()));
    }

    #[test]
    fn reciprocal_is_inverse(a in (0usize..=10).prop_flat_map(series)) {
        let u = with_unit_constant(&a);
        let one = TruncSeries::constant(Var::T, a.order(), Rational::one());
        prop_assert_eq!(u.clone() * u.reciprocal().unwrap(), one);
    }

    #[test]
    fn derivative_undoes_integral(a in (0usize..=10).prop_flat_map(series)) {
        prop_assert_eq!(a.integral().derivative(), a);
    }

    #[test]
    fn degenerate_falling_splits(x in rational(), y in rational(), al in rational(), n in 0u32..7) {
        // (x+y)_{n,α} = Σ_j C(n,j) (x)_{j,α} (y)_{n-j,α}
        let lhs = degenerate_falling(&(&x + &y), n, &al);
        let rhs: Rational = (0..=n)
            .map(|j| {
                let c = simsek_kit::classical::binomial_q(n, j);
                &(&c * &degenerate_falling(&x, j, &al)) * &degenerate_falling(&y, n - j, &al)
            })
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn deg_stirling2_specializes_at_random_alpha(al in rational()) {
        // (x)_{n,α} = Σ_l S₂,α(n,l) (x)_l evaluated at x = 7
        let t = DegStirlingTriangle::new(DegStirlingKind::Second, 6);
        let x = Rational::from_int(7);
        for n in 0..=6usize {
            let lhs = degenerate_falling(&x, n as u32, &al);
            let rhs: Rational = (0..=n)
                .map(|l| &t.get(n, l).eval(&Rational::zero(), &al) * &degenerate_falling(&x, l as u32, &Rational::one()))
                .sum();
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(t.get(5, 2).eval(&Rational::zero(), &Rational::zero()), stirling2_q(5, 2));
    }
}
