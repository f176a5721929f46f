//! Continuation of the sequence to real arguments.
//!
//! Writing `beta^t = (-1)^t (b/alpha)^t` with `(-1)^t = exp(i pi t)` gives
//! `G(t) = A alpha^t + B exp(i pi t) (b/alpha)^t + p d^t`, a curve in the
//! complex plane that meets the real axis at `G(n)` for integer `t = n`.

use serde::{Deserialize, Serialize};

use crate::classify::CYCLIC_TOLERANCE;
use crate::error::{Error, Result};
use crate::recurrence::Sequence;
use crate::trig::sin_cos_pi;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexSample {
    pub t: f64,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    /// `0 < b/alpha < 1`: the imaginary part dies out.
    Oscillatory,
    /// `b/alpha > 1`.
    Spiral,
    /// `b/alpha = 1`: constant oscillation amplitude `|B|`.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveClass {
    pub ratio: f64,
    pub kind: CurveKind,
}

fn alpha_checked(seq: &Sequence) -> Result<f64> {
    let alpha = seq.closed_form().alpha;
    if alpha <= 0.0 {
        return Err(Error::NegativeBase { name: "alpha", value: alpha });
    }
    Ok(alpha)
}

fn ratio_checked(seq: &Sequence) -> Result<f64> {
    let ratio = seq.params().b / alpha_checked(seq)?;
    if ratio <= 0.0 {
        return Err(Error::NegativeBase { name: "b/alpha", value: ratio });
    }
    Ok(ratio)
}

pub fn classify_curve(seq: &Sequence) -> Result<CurveClass> {
    let ratio = seq.params().b / alpha_checked(seq)?;
    let kind = if (ratio - 1.0).abs() <= CYCLIC_TOLERANCE {
        CurveKind::Boundary
    } else if ratio > 1.0 {
        CurveKind::Spiral
    } else if ratio > 0.0 {
        CurveKind::Oscillatory
    } else {
        return Err(Error::NegativeBase { name: "b/alpha", value: ratio });
    };
    Ok(CurveClass { ratio, kind })
}

/// `G(t)` for real `t >= 0`; the imaginary part is exactly 0 at integers.
pub fn g_continuous(seq: &Sequence, t: f64) -> Result<ComplexSample> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("t must be finite and >= 0, got {t}")));
    }
    let p = seq.params();
    let cf = seq.closed_form();
    let alpha = alpha_checked(seq)?;
    let ratio = ratio_checked(seq)?;
    if cf.p != 0.0 && p.d < 0.0 {
        return Err(Error::NegativeBase { name: "d", value: p.d });
    }
    let (s, c) = sin_cos_pi(t);
    let damped = cf.cap_b * ratio.powf(t);
    let input = if cf.p == 0.0 { 0.0 } else { cf.p * p.d.powf(t) };
    Ok(ComplexSample {
        t,
        re: cf.cap_a * alpha.powf(t) + damped * c + input,
        im: damped * s,
    })
}

/// `steps + 1` samples at `t = k t_max / steps`.
pub fn sample_curve(seq: &Sequence, t_max: f64, steps: u32) -> Result<Vec<ComplexSample>> {
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::InvalidArgument(format!("t_max must be positive, got {t_max}")));
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("at least one step is required".into()));
    }
    (0..=steps)
        .map(|k| g_continuous(seq, t_max * k as f64 / steps as f64))
        .collect()
}
