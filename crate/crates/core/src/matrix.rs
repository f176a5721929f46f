//! Matrix form of the recurrence.
//!
//! With `M = [[a, b], [1, 0]]` the transformed numbers obey
//! `(H(n), H(n-1)) = M^(n-1) (H1, H0)` and
//! `M^n = [[h(n+1), b h(n)], [h(n), b h(n-1)]]`.

use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::params::Params;
use crate::recurrence::Sequence;

/// Row-major 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Mat2(pub [[f64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1.0, 0.0], [0.0, 1.0]]);

    /// `[[a, b], [1, 0]]`.
    pub fn recurrence(params: &Params) -> Self {
        Mat2([[params.a, params.b], [1.0, 0.0]])
    }

    /// `self^n` by repeated squaring.
    pub fn pow(self, mut n: u64) -> Self {
        let mut acc = Mat2::IDENTITY;
        let mut base = self;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            n >>= 1;
            if n > 0 {
                base = base * base;
            }
        }
        acc
    }

    pub fn apply(&self, v: [f64; 2]) -> [f64; 2] {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let (l, r) = (&self.0, &rhs.0);
        let mut out = [[0.0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = l[i][0] * r[0][j] + l[i][1] * r[1][j];
            }
        }
        Mat2(out)
    }
}

/// `[[a, b], [1, 0]]^n`.
pub fn matrix_power(params: &Params, n: u64) -> Mat2 {
    Mat2::recurrence(params).pow(n)
}

/// `G(n) = h(n) G1 + b h(n-1) G0 + p (d^n - d h(n) - b h(n-1))`, `n >= 1`.
pub fn decompose(seq: &Sequence, n: u64) -> Result<f64> {
    let p = seq.params();
    let n = n as i64;
    let hn = seq.fundamental(n)?;
    let hn1 = seq.fundamental(n - 1)?;
    let homogeneous = hn * p.g1 + p.b * hn1 * p.g0;
    let pd = seq.closed_form().p;
    if pd == 0.0 {
        return Ok(homogeneous);
    }
    Ok(homogeneous + pd * (crate::recurrence::powi(p.d, n) - p.d * hn - p.b * hn1))
}
