mod common;

use common::{forward, gamma_mod4, gamma_mod4_binet, rel};
use exponacci::continuation::g_continuous;
use exponacci::matrix::matrix_power;
use exponacci::spiral::*;
use exponacci::sums::*;
use exponacci::{characteristic_roots, g_negative_recursion, Params, Sequence, Winding};
use proptest::prelude::*;

fn valid(p: &Params) -> bool {
    if p.validate().is_err() {
        return false;
    }
    let Ok((al, be)) = characteristic_roots(p) else {
        return false;
    };
    (p.d - al).abs() > 0.05
        && (p.d - be).abs() > 0.05
        && (p.a + p.b - 1.0).abs() > 0.05
        && (p.a - p.b + 1.0).abs() > 0.05
}

prop_compose! {
    fn any_params()(
        a in 0.1f64..2.0, b in 0.1f64..2.0, c in 0.0f64..=2.0, d in 0.01f64..2.0,
        g0 in -5.0f64..5.0, g1 in -5.0f64..5.0,
    ) -> Params {
        Params::new(a, b, c, d, g0, g1)
    }
}

fn params() -> impl Strategy<Value = Params> {
    any_params().prop_filter("restrictions and margins", valid)
}

/// Mixed-sign coefficients with real distinct roots.
fn signed_params() -> impl Strategy<Value = Params> {
    (-3.0f64..3.0, -2.0f64..3.0, -2.0f64..2.0, -2.0f64..2.0)
        .prop_map(|(a, b, c, d)| Params::new(a, b, c, d, 1.0, 2.0))
        .prop_filter("restrictions", |p| {
            p.validate().is_ok() && p.discriminant() > 1e-3 && p.restriction2_value().abs() > 1e-3
        })
}

fn close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * 1f64.max(x.abs()).max(y.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn vieta_and_root_relations(p in signed_params()) {
        let (al, be) = characteristic_roots(&p).unwrap();
        prop_assert!(close(al + be, p.a, 1e-12));
        prop_assert!(close(al * be, -p.b, 1e-12));
        prop_assert!(close((1.0 - al) * (1.0 - be), 1.0 - p.a - p.b, 1e-10));
        prop_assert!(close((p.d - al) * (p.d - be), p.d * p.d - p.a * p.d - p.b, 1e-10));
        prop_assert!(close(al * al + be * be, p.a * p.a + 2.0 * p.b, 1e-10));
        prop_assert!(close((al * al + 1.0) * (be * be + 1.0), p.alternating_norm(), 1e-10));
    }

    #[test]
    fn closed_form_matches_iteration(p in params()) {
        let s = Sequence::new(p).unwrap();
        for (n, g) in forward(&p, 40).iter().enumerate() {
            prop_assert!(rel(s.g(n as i64).unwrap(), *g) < 1e-9);
        }
    }

    #[test]
    fn negative_indices_agree(p in params()) {
        let s = Sequence::new(p).unwrap();
        let (m1, m2) = g_negative_recursion(&p).unwrap();
        prop_assert!(rel(s.g(-1).unwrap(), m1) < 1e-9);
        prop_assert!(rel(s.g(-2).unwrap(), m2) < 1e-9);
    }

    #[test]
    fn horadam_part_recurs(p in params()) {
        let s = Sequence::new(p).unwrap();
        for n in 2..=40 {
            let h = |k: i64| s.h(k).unwrap();
            let scale = h(n).abs().max(p.a * h(n - 1).abs()).max(p.b * h(n - 2).abs());
            prop_assert!((h(n) - p.a * h(n - 1) - p.b * h(n - 2)).abs() <= 1e-12 * scale.max(1.0));
        }
    }

    #[test]
    fn matrix_advances_horadam_pair(p in params()) {
        let s = Sequence::new(p).unwrap();
        let cf = s.closed_form();
        for n in 1..=30u64 {
            let v = matrix_power(&p, n - 1).apply([cf.h1, cf.h0]);
            prop_assert!(rel(v[0], s.h(n as i64).unwrap()) < 1e-9);
        }
    }

    #[test]
    fn sum_forms_agree(p in params(), n in 0u64..=40) {
        let s = Sequence::new(p).unwrap();
        let g = forward(&p, n as usize + 2);
        let scale = g.iter().fold(1f64, |m, v| m.max(v.abs()));
        let plain: Vec<f64> = SumForm::ALL.iter().map(|f| partial_sum(&s, n, *f).unwrap()).collect();
        let alt: Vec<f64> = SumForm::ALL.iter().map(|f| alternating_sum(&s, n, *f).unwrap()).collect();
        for v in plain.iter().chain(&alt) {
            prop_assert!(v.is_finite());
        }
        prop_assert!((plain[0] - plain[1]).abs() < 1e-9 * scale && (plain[1] - plain[2]).abs() < 1e-9 * scale);
        prop_assert!((alt[0] - alt[1]).abs() < 1e-9 * scale && (alt[1] - alt[2]).abs() < 1e-9 * scale);
    }

    #[test]
    fn gamma_difference_relation(p in params(), n in 2u64..=40) {
        let s = Sequence::new(p).unwrap();
        let g = gamma_n(&s, n).unwrap();
        let prev = gamma_n(&s, n - 2).unwrap().value;
        let sign = if ((n - g.nu as u64) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        let term = s.g(n as i64).unwrap();
        let scale = g.value.abs().max(prev.abs()).max(term.abs()).max(1.0);
        prop_assert!((g.value - prev - sign * term).abs() < 1e-9 * scale);
    }

    #[test]
    fn gamma_case_formulas(p in params(), n in 0usize..=40) {
        let s = Sequence::new(p).unwrap();
        let scale = forward(&p, n + 2).iter().fold(1f64, |m, v| m.max(v.abs()));
        let v = gamma_n(&s, n as u64).unwrap().value;
        prop_assert!((v - gamma_mod4(&p, n)).abs() < 1e-9 * scale);
        prop_assert!((v - gamma_mod4_binet(&p, n)).abs() < 1e-9 * scale);
    }

    #[test]
    fn substitution_reconstructs_gamma(p in params(), n in 0u64..=40) {
        let s = Sequence::new(p).unwrap();
        let h = Sequence::new(s.horadam_params()).unwrap();
        let nu = (n % 2) as i32;
        let m = ((n as i32 - nu) / 2 + 1) as i32;
        let d2 = p.d * p.d;
        let correction = s.closed_form().p * p.d.powi(nu) * (1.0 - (-d2).powi(m)) / (1.0 + d2);
        let lhs = gamma_horadam(&h, n).unwrap() + correction;
        let v = gamma_n(&s, n).unwrap().value;
        let scale = forward(&p, n as usize + 2).iter().fold(1f64, |m, v| m.max(v.abs()));
        prop_assert!((lhs - v).abs() < 1e-9 * scale);
    }

    #[test]
    fn slopes_are_exactly_orthogonal(p in signed_params()) {
        let s = Sequence::new(p).unwrap();
        let class = s.classify();
        if class.gamma > 0.0 {
            let (e, o) = asymptote_slopes(&class).unwrap();
            prop_assert_eq!(e * o, -1.0);
        }
    }

    #[test]
    fn segments_have_term_lengths(p in params()) {
        let s = Sequence::new(p).unwrap();
        let l = segment_lengths(&corner_points(&s, 40).unwrap());
        let g = forward(&p, 42);
        for n in 1..=40 {
            let scale = g[..=n + 1].iter().fold(1f64, |m, v| m.max(v.abs()));
            prop_assert!((l[n - 1] - g[n].abs()).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn outwinding_arcs_join(p in params()) {
        let s = Sequence::new(p).unwrap();
        for n in 1..=15 {
            let a = arc_points_outwinding(&s, n, 8).unwrap();
            let b = arc_points_outwinding(&s, n + 1, 8).unwrap();
            let scale = forward(&p, n as usize + 3).iter().fold(1f64, |m, v| m.max(v.abs()));
            prop_assert!((a[8].x - b[0].x).abs() <= 1e-9 * scale);
            prop_assert!((a[8].y - b[0].y).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn cumulative_height_is_monotone(c in 0.0f64..3.0, d in 0.0f64..2.0) {
        let p = Params::new(0.5, 0.8, c, d, 3.0, 4.0);
        prop_assume!(valid(&p));
        let s = Sequence::new(p).unwrap();
        let pts: Vec<ArcPoint> = (1..=20u64)
            .flat_map(|n| (0..=10u32).map(move |i| ArcPoint { n, i, x: 0.0, y: 0.0 }))
            .collect();
        let z = spatial_points(&s, &pts, 10, ZMode::Cumulative, AmplitudeMode::UseC).unwrap();
        prop_assert!(z.windows(2).all(|w| w[0].z <= w[1].z));
    }

    #[test]
    fn continuation_hits_terms(p in params()) {
        let s = Sequence::new(p).unwrap();
        for (n, g) in forward(&p, 30).iter().enumerate() {
            let z = g_continuous(&s, n as f64).unwrap();
            let bound = 1e-9 * 1f64.max(g.abs());
            prop_assert!((z.re - g).abs() <= bound && z.im.abs() <= bound);
        }
    }

    #[test]
    fn inwinding_limit_is_star(
        a in 0.05f64..0.6, b in 0.05f64..0.35, c in 0.0f64..2.0, d in 0.05f64..0.8,
        g0 in 0.0f64..20.0, g1 in 0.0f64..20.0,
    ) {
        let p = Params::new(a, b, c, d, g0, g1);
        prop_assume!(valid(&p));
        let s = Sequence::new(p).unwrap();
        prop_assume!(s.classify().winding == Winding::Inwinding);
        let star = intersection_point(&s).unwrap();
        let far = corner_point(&s, 400).unwrap().point();
        prop_assert!(far.distance(&star) < 1e-6 * star.x.hypot(star.y).max(1.0));
    }
}

#[test]
fn dominant_ratio() {
    let s = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
    let class = s.classify();
    let r = s.g(60).unwrap() / s.g(59).unwrap();
    assert!((r - class.dominant).abs() < 1e-6);
    let s = Sequence::new(Params::new(0.3, 0.2, 1.0, 0.5, 3.0, 4.0)).unwrap();
    assert!(s.classify().gamma <= 0.8);
    assert!(s.g(60).unwrap().abs() < 1e-3 * 4.0);
}

#[test]
fn integer_parameter_sets_are_exact() {
    use exponacci::identities::shannon_check;
    for p in [Params::FIBONACCI, Params::LUCAS, Params::PELL] {
        let s = Sequence::new(p).unwrap();
        for n in -6..=6 {
            for u in -6..=6 {
                for v in -6..=6 {
                    assert!(shannon_check(&s, n, u, v).unwrap() < 1e-12, "{p:?} {n} {u} {v}");
                }
            }
        }
    }
}
