/// `(sin(pi t), cos(pi t))`, exact at integer and half-integer `t`.
pub(crate) fn sin_cos_pi(t: f64) -> (f64, f64) {
    let r = t.rem_euclid(2.0);
    let h = 2.0 * r;
    if h == h.round() {
        return match h as u8 % 4 {
            0 => (0.0, 1.0),
            1 => (1.0, 0.0),
            2 => (0.0, -1.0),
            _ => (-1.0, 0.0),
        };
    }
    (std::f64::consts::PI * r).sin_cos()
}

/// `(sin, cos)` of the quarter-turn angle `(k / m) pi / 2`.
pub(crate) fn sin_cos_quarter(k: i64, m: i64) -> (f64, f64) {
    let k = k.rem_euclid(4 * m);
    sin_cos_pi(k as f64 / (2 * m) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_at_half_integers() {
        assert_eq!(sin_cos_pi(0.0), (0.0, 1.0));
        assert_eq!(sin_cos_pi(0.5), (1.0, 0.0));
        assert_eq!(sin_cos_pi(7.0), (0.0, -1.0));
        assert_eq!(sin_cos_pi(-0.5), (-1.0, 0.0));
        assert_eq!(sin_cos_quarter(5 * 60 + 60, 60), (0.0, -1.0));
    }

    #[test]
    fn generic_values() {
        let (s, c) = sin_cos_pi(0.25);
        assert!((s - 0.5f64.sqrt()).abs() < 1e-15 && (c - 0.5f64.sqrt()).abs() < 1e-15);
        let (s, _) = sin_cos_pi(2.0 + 1.0 / 6.0);
        assert!((s - 0.5).abs() < 1e-15);
    }
}
