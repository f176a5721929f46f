//! Rectangular and arched spirals built from the sequence.
//!
//! Corner point `P(n)` sits at `(Gamma(n), Gamma(n-1))` for even `n` and
//! `(Gamma(n-1), Gamma(n))` for odd `n`, so the segment `P(n-1) P(n)` has
//! length `|G(n)|` and consecutive segments turn by a right angle. Arched
//! spirals replace each segment by a sampled quarter-ellipse.

mod arcs;
mod asymptotes;
mod corners;
mod spatial;

use serde::{Deserialize, Serialize};

pub use arcs::{
    arc_points, arc_points_inwinding, arc_points_large_n, arc_points_outwinding, arc_spec,
    ellipticity, ArcSpec,
};
pub use asymptotes::{
    asymptote_slopes, intersection_point, intersection_quadruple, orthogonal_slopes,
    total_length_inwinding, IntersectionResult,
};
pub use corners::{corner_point, corner_points, gamma_at, segment_lengths, CornerPoint};
pub use spatial::{spatial_points, AmplitudeMode, SpiralPoint3, ZMode};

/// Points sampled per arc unless the caller asks otherwise.
pub const DEFAULT_SAMPLES: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: &Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Spiral point `i` of arc `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcPoint {
    pub n: u64,
    pub i: u32,
    pub x: f64,
    pub y: f64,
}
