use serde::{Deserialize, Serialize};

use super::Point;
use crate::error::Result;
use crate::recurrence::Sequence;
use crate::sums::gamma_n;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CornerPoint {
    pub n: u64,
    pub x: f64,
    pub y: f64,
    /// `n mod 4`.
    pub directional_index: u8,
}

impl CornerPoint {
    pub fn point(&self) -> Point {
        Point::new(self.x, self.y)
    }
}

/// `Gamma(k)`, taken as 0 for negative `k`. `Gamma(0) = G0` and
/// `Gamma(1) = G1` are returned exactly.
pub fn gamma_at(seq: &Sequence, k: i64) -> Result<f64> {
    let p = seq.params();
    match k {
        ..0 => Ok(0.0),
        0 => Ok(p.g0),
        1 => Ok(p.g1),
        _ => Ok(gamma_n(seq, k as u64)?.value),
    }
}

pub fn corner_point(seq: &Sequence, n: u64) -> Result<CornerPoint> {
    let k = n as i64;
    let here = gamma_at(seq, k)?;
    let before = gamma_at(seq, k - 1)?;
    let (x, y) = if n % 2 == 0 { (here, before) } else { (before, here) };
    Ok(CornerPoint {
        n,
        x,
        y,
        directional_index: (n % 4) as u8,
    })
}

/// `P(0) ..= P(n_max)`.
pub fn corner_points(seq: &Sequence, n_max: u64) -> Result<Vec<CornerPoint>> {
    let gammas = (0..=n_max as i64)
        .map(|k| gamma_at(seq, k))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=n_max)
        .map(|n| {
            let here = gammas[n as usize];
            let before = if n == 0 { 0.0 } else { gammas[n as usize - 1] };
            let (x, y) = if n % 2 == 0 { (here, before) } else { (before, here) };
            CornerPoint {
                n,
                x,
                y,
                directional_index: (n % 4) as u8,
            }
        })
        .collect())
}

/// Euclidean lengths of consecutive segments; empty for fewer than two points.
pub fn segment_lengths(points: &[CornerPoint]) -> Vec<f64> {
    points
        .windows(2)
        .map(|w| w[0].point().distance(&w[1].point()))
        .collect()
}
