use serde::{Deserialize, Serialize};

use crate::params::Params;
use crate::recurrence::ClosedForm;

/// Distance from 1 below which the dominant magnitude counts as cyclic.
pub const CYCLIC_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winding {
    Outwinding,
    Inwinding,
    Cyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    /// `gamma = max(|alpha|, |beta|, |d|)`; `d` only competes when `c != 0`.
    pub gamma: f64,
    /// The signed root or base whose magnitude is `gamma`.
    pub dominant: f64,
    pub winding: Winding,
    pub restriction1_ok: bool,
    pub restriction2_ok: bool,
    pub in_paper_sign_domain: bool,
}

impl Classification {
    /// `gamma > 1` or cyclic: the spiral does not shrink onto a point.
    pub fn is_outwinding(&self) -> bool {
        self.winding != Winding::Inwinding
    }
}

pub fn winding_for(gamma: f64) -> Winding {
    if (gamma - 1.0).abs() <= CYCLIC_TOLERANCE {
        Winding::Cyclic
    } else if gamma > 1.0 {
        Winding::Outwinding
    } else {
        Winding::Inwinding
    }
}

pub fn classify(params: &Params, cf: &ClosedForm) -> Classification {
    let mut dominant = if cf.alpha.abs() >= cf.beta.abs() {
        cf.alpha
    } else {
        cf.beta
    };
    if params.c != 0.0 && params.d.abs() > dominant.abs() {
        dominant = params.d;
    }
    let gamma = dominant.abs();
    Classification {
        gamma,
        dominant,
        winding: winding_for(gamma),
        restriction1_ok: params.restriction1_ok(),
        restriction2_ok: params.restriction2_ok(),
        in_paper_sign_domain: params.in_paper_sign_domain(),
    }
}
