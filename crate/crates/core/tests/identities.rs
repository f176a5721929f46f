mod common;

use exponacci::identities::*;
use exponacci::sampling::ParamSampler;
use exponacci::{Params, Sequence};

fn fuzz(kind: IdentityKind) -> IdentityReport {
    fuzz_identity(kind, &FuzzConfig::default()).unwrap()
}

#[test]
fn identities_hold_under_fuzzing() {
    for kind in IdentityKind::CHECKS {
        let r = fuzz(kind);
        assert_eq!(r.samples, 1000);
        assert!(r.max_rel_residual < 1e-8, "{}: {:?}", r.name, r);
    }
}

#[test]
fn negative_control_fails() {
    let r = fuzz(IdentityKind::PerturbedShannon);
    assert!(r.failure_rate() >= 0.99, "{r:?}");
}

#[test]
fn fuzzing_is_reproducible() {
    let cfg = FuzzConfig { samples: 200, seed: 11, ..FuzzConfig::default() };
    let a = fuzz_identity(IdentityKind::Catalan, &cfg).unwrap();
    let b = fuzz_identity(IdentityKind::Catalan, &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn lhs_equals_rhs_for_random_parameters() {
    let mut s = ParamSampler::new(5);
    for _ in 0..300 {
        let p = s.params();
        let seq = Sequence::new(p).unwrap();
        let (n, u, v) = (s.index(-8, 8), s.index(-8, 8), s.index(-8, 8));
        let sides = product_difference_sides(&seq, n, u, v).unwrap();
        assert!(sides.residual() < 1e-9, "{p:?} {n} {u} {v}");
        let rhs = product_difference_rhs(&seq, n, u, v).unwrap();
        let lhs = product_difference_lhs(&seq, n, u, v).unwrap();
        assert!((lhs - rhs.value()).abs() <= 1e-9 * sides.scale);
    }
}

#[test]
fn quadratic_form_by_substitution() {
    // H(n)^2 - a H(n) H(n-1) - b H(n-1)^2 = (-b)^(n-1) (H1^2 - a H1 H0 - b H0^2)
    let seq = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
    let quadratic = |h: &Substituted<'_>, idx: &[i64]| {
        let n = idx[0];
        let (x, y) = (h.h(n)?, h.h(n - 1)?);
        let (x1, x0) = (h.h(1)?, h.h(0)?);
        let w = (-h.b()).powi((n - 1) as i32);
        Ok(Sides::from_terms(
            &[x * x, -h.a() * x * y, -h.b() * y * y],
            &[w * x1 * x1, -w * h.a() * x1 * x0, -w * h.b() * x0 * x0],
        ))
    };
    for n in -5..15 {
        assert!(substitution_check(quadratic, &seq, &[n]).unwrap() < 1e-12, "n={n}");
    }
}

#[test]
fn root_shift_by_substitution() {
    // H(n+1) - beta H(n) = alpha^n (H1 - beta H0)
    let seq = Sequence::new(Params::new(1.3, 0.45, 0.7, 1.6, -1.0, 2.5)).unwrap();
    let cf = *seq.closed_form();
    let rule = move |h: &Substituted<'_>, idx: &[i64]| {
        let n = idx[0];
        Ok(Sides::from_terms(
            &[h.h(n + 1)?, -cf.beta * h.h(n)?],
            &[cf.alpha.powi(n as i32) * (h.h(1)? - cf.beta * h.h(0)?)],
        ))
    };
    for n in 0..20 {
        assert!(substitution_check(rule, &seq, &[n]).unwrap() < 1e-12);
    }
}

#[test]
fn ill_conditioned_draws_are_replaced() {
    let r = fuzz(IdentityKind::Shannon);
    assert!(r.rejected > 0);
    assert_eq!(r.samples, 1000);
    assert_eq!(fuzz(IdentityKind::Tagiuri).rejected, 0);
}

#[test]
fn cubes_by_substitution() {
    // H(n)^3 is a combination of alpha^3n, alpha^2n beta^n, ... and obeys
    // y(n+4) = e1 y(n+3) - e2 y(n+2) + e3 y(n+1) - e4 y(n) with
    // e_k the elementary symmetric polynomials of alpha^3, alpha^2 beta, alpha beta^2, beta^3
    let seq = Sequence::new(Params::new(0.9, 0.6, 1.2, 0.5, 2.0, -1.0)).unwrap();
    let cube = |h: &Substituted<'_>, idx: &[i64]| {
        let (a, b) = (h.a(), h.b());
        let pr = -b;
        let s2 = a * a + 2.0 * b;
        let e1 = a * s2;
        let e2 = pr * (s2 * s2 - 2.0 * b * b) + pr * pr * s2 + 2.0 * pr.powi(3);
        let e3 = pr.powi(3) * e1;
        let e4 = pr.powi(6);
        let y = |k: i64| h.h(k).map(|v| v * v * v);
        let n = idx[0];
        Ok(Sides::from_terms(
            &[y(n + 4)?, e2 * y(n + 2)?, e4 * y(n)?],
            &[e1 * y(n + 3)?, e3 * y(n + 1)?],
        ))
    };
    for n in -4..12 {
        assert!(substitution_check(cube, &seq, &[n]).unwrap() < 1e-11, "n={n}");
    }
}

#[test]
fn weighted_sum_by_substitution() {
    // (1 - a x - b x^2) sum_{k<=n} x^k H(k)
    //   = H0 + x (H1 - a H0) - x^(n+1) H(n+1) - b x^(n+2) H(n), here x = -b
    let seq = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
    let weighted = |h: &Substituted<'_>, idx: &[i64]| {
        let (a, b, n) = (h.a(), h.b(), idx[0]);
        let x = -b;
        let den = 1.0 - a * x - b * x * x;
        let lhs = (0..=n)
            .map(|k| h.h(k).map(|v| den * x.powi(k as i32) * v))
            .collect::<exponacci::Result<Vec<_>>>()?;
        let (h0, h1) = (h.h(0)?, h.h(1)?);
        Ok(Sides::from_terms(
            &lhs,
            &[
                h0,
                x * (h1 - a * h0),
                -x.powi(n as i32 + 1) * h.h(n + 1)?,
                -b * x.powi(n as i32 + 2) * h.h(n)?,
            ],
        ))
    };
    for n in 0..25 {
        assert!(substitution_check(weighted, &seq, &[n]).unwrap() < 1e-12, "n={n}");
    }
}
