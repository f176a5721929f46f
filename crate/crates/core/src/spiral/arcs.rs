use serde::{Deserialize, Serialize};

use super::corners::gamma_at;
use super::{ArcPoint, Point};
use crate::classify::Winding;
use crate::error::{Error, Result};
use crate::recurrence::{powi, Sequence};
use crate::trig::sin_cos_quarter;

/// One quarter-ellipse of an arched spiral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcSpec {
    pub n: u64,
    /// Index of the corner point used as center (`n - 2` out, `n + 4` in).
    pub center_index: i64,
    pub center: Point,
    /// Semi-axes as the formulas give them; a negative value mirrors the arc.
    pub e_x: f64,
    pub e_y: f64,
    /// `[n pi/2, (n+1) pi/2]`.
    pub phi_range: (f64, f64),
    pub samples: u32,
}

impl ArcSpec {
    /// Point `i` of `0..=samples`.
    pub fn point(&self, i: u32) -> Point {
        let (s, c) = sin_cos_quarter(
            self.n as i64 * self.samples as i64 + i as i64,
            self.samples as i64,
        );
        Point::new(self.center.x + self.e_x * c, self.center.y + self.e_y * s)
    }

    pub fn points(&self) -> Vec<ArcPoint> {
        (0..=self.samples)
            .map(|i| {
                let p = self.point(i);
                ArcPoint {
                    n: self.n,
                    i,
                    x: p.x,
                    y: p.y,
                }
            })
            .collect()
    }
}

fn check_args(n: u64, samples: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("arc numbers start at 1".into()));
    }
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "at least 2 samples per arc are required, got {samples}"
        )));
    }
    Ok(())
}

fn phi_range(n: u64) -> (f64, f64) {
    let q = std::f64::consts::FRAC_PI_2;
    (n as f64 * q, (n + 1) as f64 * q)
}

fn spec(seq: &Sequence, n: u64, samples: u32, center_index: i64, axes: (f64, f64)) -> Result<ArcSpec> {
    let k = center_index;
    let (here, before) = (gamma_at(seq, k)?, gamma_at(seq, k - 1)?);
    let (center, (e_x, e_y)) = if n % 2 == 0 {
        (Point::new(here, before), axes)
    } else {
        (Point::new(before, here), (axes.1, axes.0))
    };
    Ok(ArcSpec {
        n,
        center_index,
        center,
        e_x,
        e_y,
        phi_range: phi_range(n),
        samples,
    })
}

/// Arc `n` around `P(n-2)` for outwinding spirals, or around `P(n+4)` for
/// inwinding ones. Corner coordinates with negative index are 0, which puts
/// the first arc around the origin, starting at `(0, G1)` and ending at
/// `(G0 - G2, 0)`.
pub fn arc_spec(seq: &Sequence, n: u64, samples: u32, winding: Winding) -> Result<ArcSpec> {
    check_args(n, samples)?;
    let k = n as i64;
    let g = |j: i64| seq.g(j);
    match winding {
        Winding::Inwinding => {
            let axes = ((g(k + 4)? - g(k + 2)?).abs(), g(k + 3)?);
            spec(seq, n, samples, k + 4, axes)
        }
        _ => {
            let axes = (g(k)?, g(k + 1)? - g(k - 1)?);
            spec(seq, n, samples, k - 2, axes)
        }
    }
}

pub fn arc_points_outwinding(seq: &Sequence, n: u64, samples: u32) -> Result<Vec<ArcPoint>> {
    Ok(arc_spec(seq, n, samples, Winding::Outwinding)?.points())
}

pub fn arc_points_inwinding(seq: &Sequence, n: u64, samples: u32) -> Result<Vec<ArcPoint>> {
    let class = seq.classify();
    if class.winding != Winding::Inwinding {
        return Err(Error::NotInwinding { gamma: class.gamma });
    }
    Ok(arc_spec(seq, n, samples, Winding::Inwinding)?.points())
}

/// Arc `n` for the sequence's own winding.
pub fn arc_points(seq: &Sequence, n: u64, samples: u32) -> Result<Vec<ArcPoint>> {
    Ok(arc_spec(seq, n, samples, seq.classify().winding)?.points())
}

/// `1 - (G(n+1) - G(n-1)) / G(n)` outwinding, `1 - G(n+3) / |G(n+4) - G(n+2)|`
/// inwinding. Both compare the same pair of semi-axes for either parity.
pub fn ellipticity(seq: &Sequence, n: u64, winding: Winding) -> Result<f64> {
    let k = n as i64;
    let g = |j: i64| seq.g(j);
    match winding {
        Winding::Inwinding => {
            let den = (g(k + 4)? - g(k + 2)?).abs();
            if den == 0.0 {
                return Err(Error::ZeroDenominator("|G(n+4) - G(n+2)|"));
            }
            Ok(1.0 - g(k + 3)? / den)
        }
        _ => {
            let den = g(k)?;
            if den == 0.0 {
                return Err(Error::ZeroDenominator("G(n)"));
            }
            Ok(1.0 - (g(k + 1)? - g(k - 1)?) / den)
        }
    }
}

/// Arc `n` with the semi-axes replaced by `gamma^n` and `gamma^(n+1)`.
pub fn arc_points_large_n(seq: &Sequence, n: u64, samples: u32) -> Result<Vec<ArcPoint>> {
    check_args(n, samples)?;
    let gamma = seq.classify().gamma;
    let k = n as i64;
    let axes = (powi(gamma, k), powi(gamma, k + 1));
    Ok(spec(seq, n, samples, k - 2, axes)?.points())
}
