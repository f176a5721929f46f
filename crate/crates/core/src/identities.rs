//! Product-difference identities and the substitution method.
//!
//! The transformed numbers `H(n) = G(n) - p d^n` form a homogeneous Horadam
//! sequence, so any identity valid for Horadam numbers also holds with
//! `G(n) - p d^n` substituted. [`substitution_check`] evaluates such an
//! identity numerically; [`fuzz_identity`] aggregates residuals over random
//! parameter sets and indices.
//!
//! Residuals are measured relative to the largest individual term of either
//! side, not to the difference itself: both sides are differences of products
//! that grow like `gamma^(2n+u+v)` and can cancel to a tiny result.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::recurrence::{powi, Sequence};
use crate::sampling::{ParamSampler, DEFAULT_SEED};
use crate::sums::gamma_n;

/// Both sides of an identity evaluated at one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    /// `max(1, |term|)` over every summand on either side.
    pub scale: f64,
}

impl Sides {
    /// Sums the signed terms of each side and records their magnitude.
    pub fn from_terms(lhs: &[f64], rhs: &[f64]) -> Self {
        let scale = lhs
            .iter()
            .chain(rhs)
            .fold(1f64, |m, t| m.max(t.abs()));
        Sides {
            lhs: lhs.iter().sum(),
            rhs: rhs.iter().sum(),
            scale,
        }
    }

    pub fn residual(&self) -> f64 {
        let r = (self.lhs - self.rhs).abs() / self.scale.max(self.lhs.abs()).max(self.rhs.abs());
        if r.is_nan() {
            f64::INFINITY
        } else {
            r
        }
    }
}

fn neg_b_pow(b: f64, n: i64) -> f64 {
    powi(-b, n)
}

/// `G(n+u) G(n+v) - G(n+u+v) G(n)`.
pub fn product_difference_lhs(seq: &Sequence, n: i64, u: i64, v: i64) -> Result<f64> {
    Ok(seq.g(n + u)? * seq.g(n + v)? - seq.g(n + u + v)? * seq.g(n)?)
}

/// Right side of the generalised product-difference identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductDifferenceRhs {
    /// `(-1)^(n+1) b^n A B (alpha^u - beta^u)(alpha^v - beta^v)`.
    pub root_term: f64,
    /// The same term as `(-b)^n (H1 - H0 alpha)(H1 - H0 beta) h(u) h(v)`.
    pub root_term_fundamental: f64,
    /// `p d^(n+u+v) { G(n+u) d^-u + G(n+v) d^-v - G(n+u+v) d^(-u-v) - G(n) }`.
    pub input_term: f64,
}

impl ProductDifferenceRhs {
    pub fn value(&self) -> f64 {
        self.root_term + self.input_term
    }
}

fn input_terms(seq: &Sequence, n: i64, u: i64, v: i64) -> Result<[f64; 4]> {
    let cf = seq.closed_form();
    if cf.p == 0.0 {
        return Ok([0.0; 4]);
    }
    let d = seq.params().d;
    let w = cf.p * powi(d, n + u + v);
    Ok([
        w * seq.g(n + u)? * powi(d, -u),
        w * seq.g(n + v)? * powi(d, -v),
        -w * seq.g(n + u + v)? * powi(d, -u - v),
        -w * seq.g(n)?,
    ])
}

pub fn product_difference_rhs(seq: &Sequence, n: i64, u: i64, v: i64) -> Result<ProductDifferenceRhs> {
    let p = seq.params();
    let cf = seq.closed_form();
    if n < 0 && p.b == 0.0 {
        return Err(Error::ZeroB);
    }
    let (al, be) = (cf.alpha, cf.beta);
    let sign = if (n + 1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let root_term = sign
        * powi(p.b, n)
        * cf.cap_a
        * cf.cap_b
        * (powi(al, u) - powi(be, u))
        * (powi(al, v) - powi(be, v));
    let root_term_fundamental = neg_b_pow(p.b, n)
        * (cf.h1 - cf.h0 * al)
        * (cf.h1 - cf.h0 * be)
        * seq.fundamental(u)?
        * seq.fundamental(v)?;
    let input_term = input_terms(seq, n, u, v)?.iter().sum();
    Ok(ProductDifferenceRhs {
        root_term,
        root_term_fundamental,
        input_term,
    })
}

/// Both sides of the product-difference identity with their terms.
pub fn product_difference_sides(seq: &Sequence, n: i64, u: i64, v: i64) -> Result<Sides> {
    let lhs = [
        seq.g(n + u)? * seq.g(n + v)?,
        -seq.g(n + u + v)? * seq.g(n)?,
    ];
    let rhs = product_difference_rhs(seq, n, u, v)?;
    let mut terms = vec![rhs.root_term];
    terms.extend(input_terms(seq, n, u, v)?);
    Ok(Sides::from_terms(&lhs, &terms))
}

/// Relative residual of
/// `H(n+u) H(n+v) - H(n+u+v) H(n) = (-b)^n { H(u) H(v) - H(u+v) H(0) }`.
pub fn shannon_check(seq: &Sequence, n: i64, u: i64, v: i64) -> Result<f64> {
    let h = |k: i64| seq.h(k);
    let w = neg_b_pow(seq.params().b, n);
    let lhs = [h(n + u)? * h(n + v)?, -h(n + u + v)? * h(n)?];
    let rhs = [w * h(u)? * h(v)?, -w * h(u + v)? * h(0)?];
    Ok(Sides::from_terms(&lhs, &rhs).residual())
}

/// Horadam-number view of a sequence through `H(n) = G(n) - p d^n`.
///
/// The subtraction loses accuracy when `|p d^n|` dwarfs `H(n)`, e.g. for a
/// small base at negative indices. The view records the worst ratio
/// `(|G(n)| + |p d^n|) / max(1, |H(n)|)` seen so far.
#[derive(Debug, Clone)]
pub struct Substituted<'a> {
    seq: &'a Sequence,
    amplification: Cell<f64>,
}

impl<'a> Substituted<'a> {
    pub fn new(seq: &'a Sequence) -> Self {
        Substituted {
            seq,
            amplification: Cell::new(1.0),
        }
    }

    pub fn h(&self, n: i64) -> Result<f64> {
        let g = self.seq.g(n)?;
        let q = self.seq.particular(n);
        let h = g - q;
        let ratio = (g.abs() + q.abs()) / h.abs().max(1.0);
        if ratio > self.amplification.get() {
            self.amplification.set(ratio);
        }
        Ok(h)
    }

    pub fn a(&self) -> f64 {
        self.seq.params().a
    }

    pub fn b(&self) -> f64 {
        self.seq.params().b
    }

    /// Largest cancellation factor of the evaluations so far, at least 1.
    pub fn amplification(&self) -> f64 {
        self.amplification.get()
    }
}

/// Evaluates a Horadam-number identity on `G(n) - p d^n` and returns its
/// relative residual.
///
/// The identity receives the substituted evaluator and the index tuple and
/// returns its two sides. It is the caller's job to supply an identity that
/// holds for Horadam numbers; a wrong one shows up as a large residual.
pub fn substitution_check<F>(identity: F, seq: &Sequence, indices: &[i64]) -> Result<f64>
where
    F: Fn(&Substituted<'_>, &[i64]) -> Result<Sides>,
{
    Ok(identity(&Substituted::new(seq), indices)?.residual())
}

/// Like [`substitution_check`], also returning the evaluator's
/// [`amplification`](Substituted::amplification).
pub fn substitution_check_conditioned<F>(
    identity: F,
    seq: &Sequence,
    indices: &[i64],
) -> Result<(f64, f64)>
where
    F: Fn(&Substituted<'_>, &[i64]) -> Result<Sides>,
{
    let view = Substituted::new(seq);
    let r = identity(&view, indices)?.residual();
    Ok((r, view.amplification()))
}

fn expect_len(idx: &[i64], len: usize) -> Result<()> {
    if idx.len() == len {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "identity takes {len} indices, got {}",
            idx.len()
        )))
    }
}

/// Shannon identity, indices `[n, u, v]`.
pub fn shannon_identity(h: &Substituted<'_>, idx: &[i64]) -> Result<Sides> {
    expect_len(idx, 3)?;
    let (n, u, v) = (idx[0], idx[1], idx[2]);
    let w = neg_b_pow(h.b(), n);
    Ok(Sides::from_terms(
        &[h.h(n + u)? * h.h(n + v)?, -h.h(n + u + v)? * h.h(n)?],
        &[w * h.h(u)? * h.h(v)?, -w * h.h(u + v)? * h.h(0)?],
    ))
}

/// Catalan form (`u = -r`, `v = r`), indices `[n, r]`:
/// `H(n-r) H(n+r) - H(n)^2 = (-b)^n { H(-r) H(r) - H(0)^2 }`.
pub fn catalan_identity(h: &Substituted<'_>, idx: &[i64]) -> Result<Sides> {
    expect_len(idx, 2)?;
    let (n, r) = (idx[0], idx[1]);
    let w = neg_b_pow(h.b(), n);
    let hn = h.h(n)?;
    let h0 = h.h(0)?;
    Ok(Sides::from_terms(
        &[h.h(n - r)? * h.h(n + r)?, -hn * hn],
        &[w * h.h(-r)? * h.h(r)?, -w * h0 * h0],
    ))
}

/// d'Ocagne form (`u = m - n`, `v = 1`), indices `[m, n]`:
/// `H(m) H(n+1) - H(m+1) H(n) = (-b)^n { H(m-n) H(1) - H(m-n+1) H(0) }`.
pub fn docagne_identity(h: &Substituted<'_>, idx: &[i64]) -> Result<Sides> {
    expect_len(idx, 2)?;
    let (m, n) = (idx[0], idx[1]);
    let w = neg_b_pow(h.b(), n);
    Ok(Sides::from_terms(
        &[h.h(m)? * h.h(n + 1)?, -h.h(m + 1)? * h.h(n)?],
        &[w * h.h(m - n)? * h.h(1)?, -w * h.h(m - n + 1)? * h.h(0)?],
    ))
}

/// Shannon identity with the last left-hand index shifted by one. Not an
/// identity; kept as a negative control for the harness.
pub fn perturbed_shannon(h: &Substituted<'_>, idx: &[i64]) -> Result<Sides> {
    expect_len(idx, 3)?;
    let (n, u, v) = (idx[0], idx[1], idx[2]);
    let w = neg_b_pow(h.b(), n);
    Ok(Sides::from_terms(
        &[h.h(n + u)? * h.h(n + v)?, -h.h(n + u + v + 1)? * h.h(n)?],
        &[w * h.h(u)? * h.h(v)?, -w * h.h(u + v)? * h.h(0)?],
    ))
}

/// Identities known to the fuzz harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityKind {
    Shannon,
    ProductDifference,
    Catalan,
    DOcagne,
    /// `F(n+u) F(n+v) - F(n+u+v) F(n) = (-1)^n F(u) F(v)` on Fibonacci numbers.
    Tagiuri,
    /// `Gamma(n) - Gamma(n-2) = (-1)^((n-nu)/2) G(n)`.
    GammaDifference,
    /// Negative control, see [`perturbed_shannon`].
    PerturbedShannon,
}

impl IdentityKind {
    /// Every genuine identity.
    pub const CHECKS: [IdentityKind; 6] = [
        IdentityKind::Shannon,
        IdentityKind::ProductDifference,
        IdentityKind::Catalan,
        IdentityKind::DOcagne,
        IdentityKind::Tagiuri,
        IdentityKind::GammaDifference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Shannon => "shannon",
            IdentityKind::ProductDifference => "product-difference",
            IdentityKind::Catalan => "catalan",
            IdentityKind::DOcagne => "docagne",
            IdentityKind::Tagiuri => "tagiuri",
            IdentityKind::GammaDifference => "gamma-diff",
            IdentityKind::PerturbedShannon => "perturbed",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::CHECKS
            .into_iter()
            .chain([IdentityKind::PerturbedShannon])
            .find(|k| k.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzConfig {
    pub samples: usize,
    pub seed: u64,
    /// Indices are drawn from `[-max_index, max_index]`.
    pub max_index: i64,
    /// Residual above which a sample counts as a failure.
    pub tolerance: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            samples: 1000,
            seed: DEFAULT_SEED,
            max_index: 10,
            tolerance: 1e-8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCase {
    pub params: Params,
    pub indices: Vec<i64>,
}

/// Aggregate of one identity over many samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub samples: usize,
    pub max_rel_residual: f64,
    pub worst_case: Option<WorstCase>,
    /// Samples whose residual exceeded `tolerance`.
    pub failures: usize,
    /// Ill-conditioned draws that were replaced.
    pub rejected: usize,
    pub tolerance: f64,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn failure_rate(&self) -> f64 {
        self.failures as f64 / self.samples as f64
    }
}

/// Draws whose substituted evaluation cancels by more than this factor are
/// redrawn: they cannot resolve a residual of `1e-8` in double precision.
pub const AMPLIFICATION_LIMIT: f64 = 1e6;

struct Draw {
    params: Params,
    indices: Vec<i64>,
    residual: f64,
    amplification: f64,
}

fn draw(kind: IdentityKind, sampler: &mut ParamSampler, k: i64) -> Result<Draw> {
    let idx = |count: usize, s: &mut ParamSampler| -> Vec<i64> {
        (0..count).map(|_| s.index(-k, k)).collect()
    };
    let plain = |params, indices, residual| Draw {
        params,
        indices,
        residual,
        amplification: 1.0,
    };
    match kind {
        IdentityKind::Tagiuri => {
            let seq = Sequence::new(Params::FIBONACCI)?;
            let i = idx(3, sampler);
            let (n, u, v) = (i[0], i[1], i[2]);
            let f = |j: i64| seq.g(j);
            let sign = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let sides = Sides::from_terms(
                &[f(n + u)? * f(n + v)?, -f(n + u + v)? * f(n)?],
                &[sign * f(u)? * f(v)?],
            );
            Ok(plain(Params::FIBONACCI, i, sides.residual()))
        }
        IdentityKind::GammaDifference => {
            let params = sampler.params();
            let seq = Sequence::new(params)?;
            let n = sampler.index(2, 40);
            let g = gamma_n(&seq, n as u64)?;
            let prev = gamma_n(&seq, n as u64 - 2)?.value;
            let sign = if ((n - g.nu as i64) / 2).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let sides = Sides::from_terms(&[g.value, -prev], &[sign * seq.g(n)?]);
            Ok(plain(params, vec![n], sides.residual()))
        }
        IdentityKind::ProductDifference => {
            let params = sampler.params();
            let seq = Sequence::new(params)?;
            let i = idx(3, sampler);
            let r = product_difference_sides(&seq, i[0], i[1], i[2])?.residual();
            Ok(plain(params, i, r))
        }
        _ => {
            let params = sampler.params();
            let seq = Sequence::new(params)?;
            type Identity = fn(&Substituted<'_>, &[i64]) -> Result<Sides>;
            let (identity, arity): (Identity, usize) = match kind {
                IdentityKind::Shannon => (shannon_identity, 3),
                IdentityKind::PerturbedShannon => (perturbed_shannon, 3),
                IdentityKind::Catalan => (catalan_identity, 2),
                _ => (docagne_identity, 2),
            };
            let indices = idx(arity, sampler);
            let (residual, amplification) =
                substitution_check_conditioned(identity, &seq, &indices)?;
            Ok(Draw {
                params,
                indices,
                residual,
                amplification,
            })
        }
    }
}

/// Runs `config.samples` random checks of one identity. Ill-conditioned
/// draws (see [`AMPLIFICATION_LIMIT`]) are replaced and counted in
/// `rejected`.
pub fn fuzz_identity(kind: IdentityKind, config: &FuzzConfig) -> Result<IdentityReport> {
    if config.samples == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    let mut sampler = ParamSampler::new(config.seed);
    let mut report = IdentityReport {
        name: kind.name().to_string(),
        samples: config.samples,
        max_rel_residual: 0.0,
        worst_case: None,
        failures: 0,
        rejected: 0,
        tolerance: config.tolerance,
    };
    let mut accepted = 0;
    while accepted < config.samples {
        let d = draw(kind, &mut sampler, config.max_index)?;
        if d.amplification > AMPLIFICATION_LIMIT {
            report.rejected += 1;
            if report.rejected > 10 * config.samples {
                return Err(Error::InvalidArgument(
                    "almost every draw is ill-conditioned".into(),
                ));
            }
            continue;
        }
        accepted += 1;
        if d.residual > config.tolerance {
            report.failures += 1;
        }
        if report.worst_case.is_none() || d.residual > report.max_rel_residual {
            report.max_rel_residual = d.residual;
            report.worst_case = Some(WorstCase {
                params: d.params,
                indices: d.indices,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fib() -> Sequence {
        Sequence::new(Params::FIBONACCI).unwrap()
    }

    #[test]
    fn fibonacci_product_difference() {
        let s = fib();
        assert!((product_difference_lhs(&s, 3, 1, 2).unwrap() + 1.0).abs() < 1e-12);
        let rhs = product_difference_rhs(&s, 3, 1, 2).unwrap();
        assert!((rhs.value() + 1.0).abs() < 1e-12);
        assert_eq!(rhs.input_term, 0.0);
    }

    #[test]
    fn zero_shift_vanishes() {
        let s = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
        assert_eq!(product_difference_lhs(&s, 4, 0, 3).unwrap(), 0.0);
        let rhs = product_difference_rhs(&s, 4, 0, 3).unwrap();
        assert_eq!(rhs.root_term, 0.0);
        assert!(rhs.input_term.abs() < 1e-12);
    }

    #[test]
    fn rhs_forms_agree() {
        let s = Sequence::new(Params::new(1.3, 0.45, 0.7, 1.6, -1.0, 2.5)).unwrap();
        for (n, u, v) in [(2, 3, -1), (-3, 4, 5), (5, -2, -2)] {
            let r = product_difference_rhs(&s, n, u, v).unwrap();
            let scale = 1f64.max(r.root_term.abs());
            assert!((r.root_term - r.root_term_fundamental).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn catalan_on_fibonacci() {
        assert!(shannon_check(&fib(), 2, -2, 2).unwrap() < 1e-12);
        let s = fib();
        assert!(substitution_check(catalan_identity, &s, &[2, 2]).unwrap() < 1e-12);
    }

    #[test]
    fn shannon_at_base_index() {
        let s = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
        assert!(shannon_check(&s, 0, 3, 4).unwrap() < 1e-14);
    }

    #[test]
    fn substitution_reproduces_shannon_check() {
        let s = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
        for (n, u, v) in [(1, 2, 3), (-2, 5, -1), (4, -4, 6)] {
            let direct = shannon_check(&s, n, u, v).unwrap();
            let via = substitution_check(shannon_identity, &s, &[n, u, v]).unwrap();
            assert!(direct < 1e-13 && via < 1e-13);
        }
    }

    #[test]
    fn wrong_arity_is_an_error() {
        let s = fib();
        assert!(matches!(
            substitution_check(shannon_identity, &s, &[1, 2]),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn perturbed_identity_fails() {
        let s = Sequence::new(Params::new(0.5, 0.8, 1.0, 0.9, 3.0, 4.0)).unwrap();
        assert!(substitution_check(perturbed_shannon, &s, &[2, 1, 3]).unwrap() > 1e-3);
    }

    #[test]
    fn kind_names_round_trip() {
        for k in IdentityKind::CHECKS {
            assert_eq!(IdentityKind::from_name(k.name()), Some(k));
        }
        assert_eq!(
            IdentityKind::from_name("perturbed"),
            Some(IdentityKind::PerturbedShannon)
        );
        assert_eq!(IdentityKind::from_name("nope"), None);
    }

    #[test]
    fn small_fuzz_run_passes() {
        let cfg = FuzzConfig {
            samples: 50,
            ..FuzzConfig::default()
        };
        for k in IdentityKind::CHECKS {
            let r = fuzz_identity(k, &cfg).unwrap();
            assert!(r.passed(), "{}: {}", r.name, r.max_rel_residual);
            assert_eq!(r.samples, 50);
        }
        assert!(fuzz_identity(IdentityKind::Shannon, &FuzzConfig { samples: 0, ..cfg }).is_err());
    }
}
