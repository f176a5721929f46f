//! Closed-form partial sums.
//!
//! Besides the plain and sign-alternating cumulative sums, this module
//! provides the alternating even/odd-indexed sum
//!
//! ```text
//! Gamma(n) = sum_{k=0}^{(n-nu)/2} (-1)^k G(2k + nu),   nu = n mod 2
//! ```
//!
//! which supplies the corner coordinates of the rectangular spiral.

use serde::{Deserialize, Serialize};

use crate::classify::Winding;
use crate::error::{Error, Result};
use crate::params::{coefficient_tolerance, Params};
use crate::recurrence::{powi, Sequence};

/// Below this distance from 1 the geometric sum uses its `d = 1` branch.
pub const UNIT_BASE_TOLERANCE: f64 = 1e-12;

/// `(d^x - 1) / (d - 1)` for real `x`, the limit `x` at `d = 1`.
pub(crate) fn geometric_ratio(d: f64, x: f64) -> f64 {
    let dm1 = d - 1.0;
    if dm1.abs() <= UNIT_BASE_TOLERANCE {
        x
    } else if d > 0.0 && dm1.abs() < 0.5 {
        // d^x - 1 without cancellation
        (x * dm1.ln_1p()).exp_m1() / dm1
    } else if x.fract() == 0.0 {
        (powi(d, x as i64) - 1.0) / dm1
    } else {
        (d.powf(x) - 1.0) / dm1
    }
}

/// `S_n(d) = 1 + d + ... + d^n`; the empty sum `0` for `n < 0`.
pub fn geometric_sum(d: f64, n: i64) -> f64 {
    if n < 0 {
        0.0
    } else {
        geometric_ratio(d, (n + 1) as f64)
    }
}

/// Which of the three algebraically equivalent closed forms to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SumForm {
    /// Uses `G(n)`, `G(n+1)` and `S_{n-1}`.
    A,
    /// Uses `G(n+1)`, `G(n+2)` and `S_n`.
    B,
    /// Horadam part plus `p S_n`.
    C,
}

impl SumForm {
    pub const ALL: [SumForm; 3] = [SumForm::A, SumForm::B, SumForm::C];
}

fn checked_denominator(params: &Params, value: f64, name: &'static str) -> Result<f64> {
    if value.abs() <= coefficient_tolerance(params) {
        Err(Error::DegenerateDenominator { name, value })
    } else {
        Ok(value)
    }
}

/// `sum_{k=0}^{n} G(k)`.
pub fn partial_sum(seq: &Sequence, n: u64, form: SumForm) -> Result<f64> {
    let p = seq.params();
    let den = checked_denominator(p, p.a + p.b - 1.0, "a + b - 1")?;
    let n = n as i64;
    let cd2 = p.c * p.d * p.d;
    let v = match form {
        SumForm::A => {
            ((p.a - 1.0) * p.g0 - p.g1 + p.b * seq.g(n)? + seq.g(n + 1)?
                - cd2 * geometric_sum(p.d, n - 1))
                / den
        }
        SumForm::B => {
            ((p.a - 1.0) * (p.g0 - seq.g(n + 1)?) - p.g1 + seq.g(n + 2)?
                - cd2 * geometric_sum(p.d, n))
                / den
        }
        SumForm::C => {
            let cf = seq.closed_form();
            ((p.a - 1.0) * cf.h0 - cf.h1 + p.b * seq.h(n)? + seq.h(n + 1)?) / den
                + input_sum(cf.p, p.d, n)
        }
    };
    Ok(v)
}

/// `p S_n(d)`, zero without input.
fn input_sum(p: f64, d: f64, n: i64) -> f64 {
    if p == 0.0 {
        0.0
    } else {
        p * geometric_sum(d, n)
    }
}

fn parity_sign(k: i64) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `sum_{k=0}^{n} (-1)^k G(k)`.
pub fn alternating_sum(seq: &Sequence, n: u64, form: SumForm) -> Result<f64> {
    let p = seq.params();
    let den = checked_denominator(p, p.a - p.b + 1.0, "a - b + 1")?;
    let n = n as i64;
    let s = parity_sign(n);
    let cd2 = p.c * p.d * p.d;
    let v = match form {
        SumForm::A => {
            ((p.a + 1.0) * p.g0 - p.g1 + s * (seq.g(n + 1)? - p.b * seq.g(n)?)
                + cd2 * geometric_sum(-p.d, n - 1))
                / den
        }
        SumForm::B => {
            ((p.a + 1.0) * (p.g0 + s * seq.g(n + 1)?) - p.g1 - s * seq.g(n + 2)?
                + cd2 * geometric_sum(-p.d, n))
                / den
        }
        SumForm::C => {
            let cf = seq.closed_form();
            ((p.a + 1.0) * cf.h0 - cf.h1 + s * (seq.h(n + 1)? - p.b * seq.h(n)?)) / den
                + input_sum(cf.p, -p.d, n)
        }
    };
    Ok(v)
}

/// One value of the alternating even/odd-indexed sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaValue {
    pub n: u64,
    /// `n mod 2`: 0 sums even-indexed terms, 1 odd-indexed ones.
    pub nu: u8,
    pub value: f64,
}

/// `c (d^2 + a d - b) / (d^2 + 1)`.
fn input_weight(p: &Params) -> f64 {
    if p.c == 0.0 {
        0.0
    } else {
        p.c * (p.d * p.d + p.a * p.d - p.b) / (p.d * p.d + 1.0)
    }
}

/// `(G(nu), G(nu - 2))`.
fn base_pair(seq: &Sequence, nu: u8) -> Result<(f64, f64)> {
    let p = seq.params();
    let (g_m1, g_m2) = seq.negative_pair()?;
    Ok(if nu == 0 { (p.g0, g_m2) } else { (p.g1, g_m1) })
}

/// The index-free part of `Gamma`:
/// `(G(nu) + b^2 G(nu-2) - c (d^2 + a d - b)/(d^2 + 1) d^nu) / (a^2 + (b+1)^2)`.
///
/// For an inwinding sequence this is the limit of `Gamma(n)` over `n` of
/// parity `nu`; the pair for `nu = 0, 1` is the asymptote intersection `P*`.
pub fn gamma_constant(seq: &Sequence, nu: u8) -> Result<f64> {
    let p = seq.params();
    let (g_nu, g_nu2) = base_pair(seq, nu)?;
    let b2 = p.b * p.b;
    Ok((g_nu + b2 * g_nu2 - input_weight(p) * powi(p.d, nu as i64)) / p.alternating_norm())
}

/// Closed form of `Gamma(n)`.
pub fn gamma_n(seq: &Sequence, n: u64) -> Result<GammaValue> {
    let p = seq.params();
    if p.b == 0.0 {
        return Err(Error::ZeroB);
    }
    let nu = (n % 2) as u8;
    let ni = n as i64;
    let s = parity_sign((ni - nu as i64) / 2);
    let (g_nu, g_nu2) = base_pair(seq, nu)?;
    let b2 = p.b * p.b;
    let growing = s * (seq.g(ni + 2)? + b2 * seq.g(ni)?);
    let input = input_weight(p) * (s * powi(p.d, ni + 2) + powi(p.d, nu as i64));
    let value = (growing + g_nu + b2 * g_nu2 - input) / p.alternating_norm();
    Ok(GammaValue { n, nu, value })
}

/// Horadam special case (`c = 0`) of [`gamma_n`].
pub fn gamma_horadam(seq: &Sequence, n: u64) -> Result<f64> {
    let p = seq.params();
    if p.c != 0.0 {
        return Err(Error::NotHoradam { c: p.c });
    }
    if p.b == 0.0 {
        return Err(Error::ZeroB);
    }
    let nu = (n % 2) as u8;
    let ni = n as i64;
    let s = parity_sign((ni - nu as i64) / 2);
    let b2 = p.b * p.b;
    let (h_nu, h_nu2) = base_pair(seq, nu)?;
    Ok((s * (seq.h(ni + 2)? + b2 * seq.h(ni)?) + h_nu + b2 * h_nu2) / p.alternating_norm())
}

/// Large-`n` behaviour of `Gamma(n)` for one parity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum GammaLimit {
    /// Inwinding: `Gamma(n)` tends to this constant.
    Converges(f64),
    /// `gamma >= 1`: `Gamma(n)` grows like `(-1)^((n-nu)/2) gamma^(n+2)`.
    Divergent { gamma: f64, nu: u8 },
}

impl GammaLimit {
    /// Signed growth envelope `(-1)^((n-nu)/2) gamma^(n+2)` of a divergent sum.
    pub fn envelope(&self, n: u64) -> Option<f64> {
        match *self {
            GammaLimit::Converges(_) => None,
            GammaLimit::Divergent { gamma, nu } => {
                let k = (n as i64 - nu as i64) / 2;
                Some(parity_sign(k) * powi(gamma, n as i64 + 2))
            }
        }
    }
}

pub fn gamma_limit(seq: &Sequence, nu: u8) -> Result<GammaLimit> {
    if nu > 1 {
        return Err(Error::InvalidArgument(format!("parity must be 0 or 1, got {nu}")));
    }
    let class = seq.classify();
    if class.winding == Winding::Inwinding {
        Ok(GammaLimit::Converges(gamma_constant(seq, nu)?))
    } else {
        Ok(GammaLimit::Divergent { gamma: class.gamma, nu })
    }
}
