use serde::{Deserialize, Serialize};

use super::ArcPoint;
use crate::error::{Error, Result};
use crate::recurrence::Sequence;
use crate::sums::geometric_ratio;

/// Height profile of a spatial spiral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZMode {
    /// `n + i/N`.
    Linear,
    /// `amp d^(n + i/N)`.
    LocalInput,
    /// `amp (d^(n+1+i/N) - 1) / (d - 1)`.
    Cumulative,
}

/// Which constant scales the exponential profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AmplitudeMode {
    UseC,
    UseP,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpiralPoint3 {
    pub n: u64,
    pub i: u32,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Lifts arc points `(n, i)` sampled with `samples` points per arc.
pub fn spatial_points(
    seq: &Sequence,
    planar: &[ArcPoint],
    samples: u32,
    z_mode: ZMode,
    amplitude: AmplitudeMode,
) -> Result<Vec<SpiralPoint3>> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be positive".into()));
    }
    let d = seq.params().d;
    let amp = match amplitude {
        AmplitudeMode::UseC => seq.params().c,
        AmplitudeMode::UseP => seq.closed_form().p,
    };
    if z_mode != ZMode::Linear && amp != 0.0 && d < 0.0 {
        return Err(Error::NegativeBase { name: "d", value: d });
    }
    Ok(planar
        .iter()
        .map(|pt| {
            let t = pt.n as f64 + pt.i as f64 / samples as f64;
            let z = match z_mode {
                ZMode::Linear => t,
                _ if amp == 0.0 => 0.0,
                ZMode::LocalInput => amp * d.powf(t),
                ZMode::Cumulative => amp * geometric_ratio(d, t + 1.0),
            };
            SpiralPoint3 {
                n: pt.n,
                i: pt.i,
                x: pt.x,
                y: pt.y,
                z,
            }
        })
        .collect())
}
