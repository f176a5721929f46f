//! The six real numbers `(a, b, c, d; G0, G1)` that pin down one sequence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of `G(n) = a G(n-1) + b G(n-2) + c d^n` with initial values
/// `G(0) = g0`, `G(1) = g1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub g0: f64,
    pub g1: f64,
}

impl Params {
    /// Genuine Fibonacci numbers `(1, 1, 0, 0; 0, 1)`.
    pub const FIBONACCI: Params = Params::new(1.0, 1.0, 0.0, 0.0, 0.0, 1.0);
    /// Lucas numbers `(1, 1, 0, 0; 2, 1)`.
    pub const LUCAS: Params = Params::new(1.0, 1.0, 0.0, 0.0, 2.0, 1.0);
    /// Pell numbers `(2, 1, 0, 0; 0, 1)`.
    pub const PELL: Params = Params::new(2.0, 1.0, 0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64, g0: f64, g1: f64) -> Self {
        Params { a, b, c, d, g0, g1 }
    }

    /// Homogeneous (Horadam) parameters `(a, b, 0, 0; h0, h1)`.
    pub const fn horadam(a: f64, b: f64, h0: f64, h1: f64) -> Self {
        Params::new(a, b, 0.0, 0.0, h0, h1)
    }

    /// `a^2 + 4b`, positive under restriction 1.
    pub fn discriminant(&self) -> f64 {
        self.a * self.a + 4.0 * self.b
    }

    /// `d^2 - a d - b = (d - alpha)(d - beta)`, nonzero under restriction 2.
    pub fn restriction2_value(&self) -> f64 {
        self.d * self.d - self.a * self.d - self.b
    }

    /// Scale-aware zero threshold for [`Params::restriction2_value`].
    pub fn restriction2_tolerance(&self) -> f64 {
        let d2 = self.d * self.d;
        1e-9 * 1f64.max(d2).max((self.a * self.d).abs()).max(self.b.abs())
    }

    pub fn restriction1_ok(&self) -> bool {
        self.discriminant() > 0.0
    }

    pub fn restriction2_ok(&self) -> bool {
        self.restriction2_value().abs() > self.restriction2_tolerance()
    }

    /// `a, b > 0` and `c, d >= 0`.
    pub fn in_paper_sign_domain(&self) -> bool {
        self.a > 0.0 && self.b > 0.0 && self.c >= 0.0 && self.d >= 0.0
    }

    /// `a^2 + (b + 1)^2 = (alpha^2 + 1)(beta^2 + 1)`, the normaliser of the
    /// alternating even/odd sums.
    pub fn alternating_norm(&self) -> f64 {
        self.a * self.a + (self.b + 1.0) * (self.b + 1.0)
    }

    /// Checks finiteness and both restrictions.
    ///
    /// Restriction 2 only matters when the exponential input is present: with
    /// `c = 0` the particular solution vanishes identically and any `d` is fine.
    pub fn validate(&self) -> Result<()> {
        let fields = [self.a, self.b, self.c, self.d, self.g0, self.g1];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "parameters must be finite, got {self:?}"
            )));
        }
        if !self.restriction1_ok() {
            return Err(Error::NonPositiveDiscriminant {
                discriminant: self.discriminant(),
            });
        }
        if self.c != 0.0 && !self.restriction2_ok() {
            return Err(Error::DegenerateExponentialBase {
                value: self.restriction2_value(),
            });
        }
        Ok(())
    }
}

/// Zero threshold for denominators such as `a + b - 1` built from `a` and `b`.
pub(crate) fn coefficient_tolerance(p: &Params) -> f64 {
    1e-9 * 1f64.max(p.a.abs()).max(p.b.abs())
}
