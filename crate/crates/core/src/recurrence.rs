//! Characteristic roots, the explicit solution and the brute-force iteration.
//!
//! The explicit solution is
//!
//! ```text
//! G(n) = A alpha^n + B beta^n + p d^n,      p = c d^2 / (d^2 - a d - b)
//! H(n) = G(n) - p d^n = A alpha^n + B beta^n
//! ```
//!
//! where `H` is an ordinary (homogeneous, real valued) Horadam sequence with
//! initial values `H0 = G0 - p` and `H1 = G1 - p d`.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Classification};
use crate::error::{Error, Result};
use crate::params::Params;

/// `x^n` for a signed integer exponent.
pub(crate) fn powi(x: f64, n: i64) -> f64 {
    match i32::try_from(n) {
        Ok(k) => x.powi(k),
        Err(_) => x.powf(n as f64),
    }
}

/// Roots `(alpha, beta)` of `x^2 - a x - b = 0` with `alpha > beta`.
///
/// The root of larger magnitude comes from the quadratic formula and the
/// other from Vieta (`alpha beta = -b`), which avoids cancellation when
/// `|a|` dominates `|b|`.
pub fn characteristic_roots(params: &Params) -> Result<(f64, f64)> {
    let disc = params.discriminant();
    if !(disc > 0.0) {
        return Err(Error::NonPositiveDiscriminant { discriminant: disc });
    }
    let sq = disc.sqrt();
    let (a, b) = (params.a, params.b);
    if a >= 0.0 {
        let alpha = 0.5 * (a + sq);
        Ok((alpha, -b / alpha))
    } else {
        let beta = 0.5 * (a - sq);
        Ok((-b / beta, beta))
    }
}

/// Constants of the explicit solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub alpha: f64,
    pub beta: f64,
    /// Amplitude of the particular solution `p d^n`.
    pub p: f64,
    pub cap_a: f64,
    pub cap_b: f64,
    /// `H0 = G0 - p`
    pub h0: f64,
    /// `H1 = G1 - p d`
    pub h1: f64,
}

impl ClosedForm {
    /// `alpha - beta = sqrt(a^2 + 4b)`.
    pub fn root_gap(&self) -> f64 {
        self.alpha - self.beta
    }
}

/// Solves for `alpha, beta, p, A, B, H0, H1`.
pub fn solve_closed_form(params: &Params) -> Result<ClosedForm> {
    params.validate()?;
    let (alpha, beta) = characteristic_roots(params)?;
    let p = if params.c == 0.0 {
        0.0
    } else {
        params.c * params.d * params.d / params.restriction2_value()
    };
    let h0 = params.g0 - p;
    let h1 = params.g1 - p * params.d;
    let gap = params.discriminant().sqrt();
    Ok(ClosedForm {
        alpha,
        beta,
        p,
        cap_a: (h1 - h0 * beta) / gap,
        cap_b: -(h1 - h0 * alpha) / gap,
        h0,
        h1,
    })
}

/// `G(n)` by literal forward iteration from `G0`, `G1`.
///
/// Overflow follows IEEE semantics.
pub fn g_iterative(params: &Params, n: u64) -> f64 {
    match n {
        0 => params.g0,
        1 => params.g1,
        _ => {
            let (mut prev, mut cur) = (params.g0, params.g1);
            for k in 2..=n {
                let next = params.a * cur + params.b * prev + params.c * powi(params.d, k as i64);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `G(0), ..., G(n_max)` by forward iteration.
pub fn iterate(params: &Params, n_max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(params.g0);
    if n_max >= 1 {
        out.push(params.g1);
    }
    for k in 2..=n_max {
        let next = params.a * out[k - 1] + params.b * out[k - 2] + params.c * powi(params.d, k as i64);
        out.push(next);
    }
    out
}

/// `(G(-1), G(-2))` from the recurrence run backwards twice.
pub fn g_negative_recursion(params: &Params) -> Result<(f64, f64)> {
    let Params { a, b, c, d, g0, g1 } = *params;
    if b == 0.0 {
        return Err(Error::ZeroB);
    }
    let g_m1 = (g1 - a * g0 - c * d) / b;
    let g_m2 = ((a * a + b) * g0 - a * g1 + c * (a * d - b)) / (b * b);
    Ok((g_m1, g_m2))
}

/// A validated parameter set together with its explicit solution.
///
/// All evaluation in the crate goes through this type.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sequence {
    params: Params,
    cf: ClosedForm,
}

impl Sequence {
    pub fn new(params: Params) -> Result<Self> {
        let cf = solve_closed_form(&params)?;
        Ok(Sequence { params, cf })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn closed_form(&self) -> &ClosedForm {
        &self.cf
    }

    fn check_negative(&self, n: i64) -> Result<()> {
        if n < 0 {
            if self.params.b == 0.0 {
                return Err(Error::ZeroB);
            }
            if self.params.d == 0.0 && self.params.c != 0.0 {
                return Err(Error::UndefinedNegativePower { n });
            }
        }
        Ok(())
    }

    /// Particular part `p d^n` (zero when `p = 0`, whatever `d` is).
    pub fn particular(&self, n: i64) -> f64 {
        if self.cf.p == 0.0 {
            0.0
        } else {
            self.cf.p * powi(self.params.d, n)
        }
    }

    /// `A alpha^n + B beta^n`, no index checks.
    fn homogeneous(&self, n: i64) -> f64 {
        let ClosedForm { alpha, beta, cap_a, cap_b, .. } = self.cf;
        let ta = if cap_a == 0.0 { 0.0 } else { cap_a * powi(alpha, n) };
        let tb = if cap_b == 0.0 { 0.0 } else { cap_b * powi(beta, n) };
        ta + tb
    }

    /// `G(n) = A alpha^n + B beta^n + p d^n` for any integer `n`.
    pub fn g(&self, n: i64) -> Result<f64> {
        self.check_negative(n)?;
        Ok(self.homogeneous(n) + self.particular(n))
    }

    /// Transformed Horadam number `H(n) = G(n) - p d^n`.
    pub fn h(&self, n: i64) -> Result<f64> {
        self.check_negative(n)?;
        Ok(self.homogeneous(n))
    }

    /// Fundamental Horadam number `h(n) = (alpha^n - beta^n) / (alpha - beta)`,
    /// the sequence `(a, b, 0, 0; 0, 1)`.
    pub fn fundamental(&self, n: i64) -> Result<f64> {
        if n < 0 && self.params.b == 0.0 {
            return Err(Error::ZeroB);
        }
        let ClosedForm { alpha, beta, .. } = self.cf;
        Ok((powi(alpha, n) - powi(beta, n)) / self.params.discriminant().sqrt())
    }

    /// `(G(-1), G(-2))` from the backward recursion.
    pub fn negative_pair(&self) -> Result<(f64, f64)> {
        g_negative_recursion(&self.params)
    }

    /// `(a, b, 0, 0; H0, H1)`.
    pub fn horadam_params(&self) -> Params {
        Params::horadam(self.params.a, self.params.b, self.cf.h0, self.cf.h1)
    }

    pub fn classify(&self) -> Classification {
        classify(&self.params, &self.cf)
    }
}
