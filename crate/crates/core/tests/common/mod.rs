//! Brute-force reference values, written without the library's closed forms.
#![allow(dead_code)]

use exponacci::Params;

/// `G(0..=n_max)` by stepping the recurrence.
pub fn forward(p: &Params, n_max: usize) -> Vec<f64> {
    let mut g = vec![p.g0, p.g1];
    let mut dn = p.d;
    for _ in 1..n_max {
        dn *= p.d;
        let k = g.len();
        g.push(p.a * g[k - 1] + p.b * g[k - 2] + p.c * dn);
    }
    g.truncate(n_max + 1);
    g
}

/// `G(-k)` by stepping the recurrence backwards.
pub fn backward(p: &Params, k: usize) -> f64 {
    // G(n-2) = (G(n) - a G(n-1) - c d^n) / b
    let (mut hi, mut lo) = (p.g1, p.g0);
    let mut n = 1i32;
    for _ in 0..k {
        let next = (hi - p.a * lo - p.c * p.d.powi(n)) / p.b;
        hi = lo;
        lo = next;
        n -= 1;
    }
    lo
}

/// `G(n)` for any integer index.
pub fn g_any(p: &Params, n: i64) -> f64 {
    if n >= 0 {
        forward(p, n as usize)[n as usize]
    } else {
        backward(p, (-n) as usize)
    }
}

pub fn plain_sum(g: &[f64], n: usize) -> f64 {
    g[..=n].iter().sum()
}

pub fn alternating_sum(g: &[f64], n: usize) -> f64 {
    g[..=n]
        .iter()
        .enumerate()
        .map(|(k, v)| if k % 2 == 0 { *v } else { -*v })
        .sum()
}

/// `G(nu) - G(nu+2) + G(nu+4) - ...` up to `G(n)`, `nu = n mod 2`.
pub fn gamma_direct(g: &[f64], n: usize) -> f64 {
    (n % 2..=n)
        .step_by(2)
        .enumerate()
        .map(|(j, k)| if j % 2 == 0 { g[k] } else { -g[k] })
        .sum()
}

fn weight(p: &Params) -> f64 {
    p.c * (p.d * p.d + p.a * p.d - p.b) / (p.d * p.d + 1.0)
}

/// The four `n mod 4` case formulas in `G` form.
pub fn gamma_mod4(p: &Params, n: usize) -> f64 {
    let g = forward(p, n + 2);
    let (gn2, gn) = (g[n + 2], g[n]);
    let b2 = p.b * p.b;
    let k = p.a * p.a + (p.b + 1.0) * (p.b + 1.0);
    let q = weight(p);
    let dn2 = p.d.powi(n as i32 + 2);
    let num = match n % 4 {
        0 => gn2 + b2 * gn + p.g0 + b2 * backward(p, 2) - q * (dn2 + 1.0),
        2 => -(gn2 + b2 * gn) + p.g0 + b2 * backward(p, 2) - q * (-dn2 + 1.0),
        1 => gn2 + b2 * gn + p.g1 + b2 * backward(p, 1) - q * (dn2 + p.d),
        _ => -(gn2 + b2 * gn) + p.g1 + b2 * backward(p, 1) - q * (-dn2 + p.d),
    };
    num / k
}

/// Roots, coefficients and particular amplitude derived from scratch.
pub struct Binet {
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
    pub b: f64,
    pub p: f64,
}

pub fn binet(p: &Params) -> Binet {
    let s = (p.a * p.a + 4.0 * p.b).sqrt();
    let alpha = (p.a + s) / 2.0;
    let beta = (p.a - s) / 2.0;
    let amp = if p.c == 0.0 {
        0.0
    } else {
        p.c * p.d * p.d / (p.d * p.d - p.a * p.d - p.b)
    };
    let h0 = p.g0 - amp;
    let h1 = p.g1 - amp * p.d;
    Binet {
        alpha,
        beta,
        a: (h1 - beta * h0) / (alpha - beta),
        b: (alpha * h0 - h1) / (alpha - beta),
        p: amp,
    }
}

/// The four `n mod 4` case formulas in root form.
pub fn gamma_mod4_binet(p: &Params, n: usize) -> f64 {
    let bf = binet(p);
    let term = |c: f64, r: f64| {
        let rn2 = r.powi(n as i32 + 2);
        let den = r * r + 1.0;
        c * match n % 4 {
            0 => (rn2 + 1.0) / den,
            2 => -(rn2 - 1.0) / den,
            1 => (rn2 + r) / den,
            _ => -(rn2 - r) / den,
        }
    };
    term(bf.a, bf.alpha) + term(bf.b, bf.beta) + term(bf.p, p.d)
}

/// `h(n)` of the homogeneous recurrence with `h(0) = 0, h(1) = 1`.
pub fn fundamental(a: f64, b: f64, n: usize) -> f64 {
    let (mut x, mut y) = (0.0, 1.0);
    for _ in 0..n {
        let z = a * y + b * x;
        x = y;
        y = z;
    }
    x
}

pub fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(y.abs())
}
