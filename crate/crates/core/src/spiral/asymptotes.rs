use serde::{Deserialize, Serialize};

use super::corners::corner_point;
use super::Point;
use crate::classify::{Classification, Winding};
use crate::error::{Error, Result};
use crate::params::coefficient_tolerance;
use crate::recurrence::Sequence;
use crate::sums::gamma_constant;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntersectionResult {
    pub p_star: Point,
    /// Intersections of the asymptote through `P(n+j)` with the one through
    /// `P(n+j+1)`, `j = 0..4`.
    pub quadruple: Option<[Point; 4]>,
    pub converged: bool,
}

impl IntersectionResult {
    /// Largest distance of a quadruple point from `P*`.
    pub fn max_drift(&self) -> Option<f64> {
        self.quadruple
            .map(|q| q.iter().map(|p| p.distance(&self.p_star)).fold(0.0, f64::max))
    }
}

fn ulp_step(x: f64, k: i32) -> f64 {
    let mut y = x;
    for _ in 0..k.unsigned_abs() {
        y = if k > 0 { y.next_up() } else { y.next_down() };
    }
    y
}

/// `(-1/gamma, gamma)` rounded so that the product is exactly `-1`.
pub fn orthogonal_slopes(gamma: f64) -> Result<(f64, f64)> {
    if gamma == 0.0 || !gamma.is_finite() {
        return Err(Error::ZeroGamma);
    }
    let even = -1.0 / gamma;
    for odd_step in [0, 1, -1] {
        let odd = ulp_step(gamma, odd_step);
        for even_step in [0, 1, -1, 2, -2, 3, -3] {
            let e = ulp_step(even, even_step);
            if e * odd == -1.0 {
                return Ok((e, odd));
            }
        }
    }
    Ok((even, gamma))
}

/// Slopes of the asymptotes through even- and odd-indexed corner points.
pub fn asymptote_slopes(class: &Classification) -> Result<(f64, f64)> {
    orthogonal_slopes(class.gamma)
}

/// `P* = (Gamma_0*, Gamma_1*)`, the intersection of the two asymptotes and,
/// for inwinding spirals, the limit of the corner points.
pub fn intersection_point(seq: &Sequence) -> Result<Point> {
    Ok(Point::new(gamma_constant(seq, 0)?, gamma_constant(seq, 1)?))
}

fn intersect(p: Point, m: f64, q: Point, k: f64) -> Point {
    let x = (q.y - p.y + m * p.x - k * q.x) / (m - k);
    Point::new(x, p.y + m * (x - p.x))
}

/// Approximate asymptote intersections near corner `n` of an outwinding
/// spiral. `converged` is set when exactly one of `alpha` and (for `c != 0`)
/// `d` exceeds 1; otherwise the points drift away from `P*` as `n` grows.
pub fn intersection_quadruple(seq: &Sequence, n: u64) -> Result<IntersectionResult> {
    let class = seq.classify();
    if class.winding != Winding::Outwinding {
        return Err(Error::NotOutwinding { gamma: class.gamma });
    }
    let (even, odd) = asymptote_slopes(&class)?;
    let slope = |k: u64| if k % 2 == 0 { even } else { odd };
    let corners = (n..n + 5)
        .map(|k| corner_point(seq, k).map(|c| c.point()))
        .collect::<Result<Vec<_>>>()?;
    let mut quad = [Point::new(0.0, 0.0); 4];
    for (j, q) in quad.iter_mut().enumerate() {
        let k = n + j as u64;
        *q = intersect(corners[j], slope(k), corners[j + 1], slope(k + 1));
    }
    let p = seq.params();
    let alpha_out = seq.closed_form().alpha > 1.0;
    let d_out = p.c != 0.0 && p.d > 1.0;
    Ok(IntersectionResult {
        p_star: intersection_point(seq)?,
        quadruple: Some(quad),
        converged: alpha_out != d_out,
    })
}

/// `sum_{k >= 0} G(k)` for an inwinding spiral:
/// `((a-1) G0 - G1 - c d^2 / (1-d)) / (a+b-1)`.
pub fn total_length_inwinding(seq: &Sequence) -> Result<f64> {
    let class = seq.classify();
    if class.winding != Winding::Inwinding {
        return Err(Error::NotInwinding { gamma: class.gamma });
    }
    let p = seq.params();
    let den = p.a + p.b - 1.0;
    if den.abs() <= coefficient_tolerance(p) {
        return Err(Error::DegenerateDenominator {
            name: "a + b - 1",
            value: den,
        });
    }
    let input = if p.c == 0.0 {
        0.0
    } else {
        p.c * p.d * p.d / (1.0 - p.d)
    };
    Ok(((p.a - 1.0) * p.g0 - p.g1 - input) / den)
}
