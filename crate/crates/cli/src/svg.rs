use std::fmt::Write;

use exponacci::Point;

use crate::output::fmt_f64;

#[derive(Debug, Default)]
pub struct Figure {
    pub corners: Vec<Point>,
    pub arcs: Vec<Vec<Point>>,
    pub p_star: Option<Point>,
    /// Asymptote slopes through `P*`.
    pub slopes: Option<(f64, f64)>,
    pub quadruple: Option<[Point; 4]>,
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn of<'a>(points: impl Iterator<Item = &'a Point>) -> Bounds {
        let mut b = Bounds {
            min_x: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            min_y: f64::INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for p in points.filter(|p| p.x.is_finite() && p.y.is_finite()) {
            b.min_x = b.min_x.min(p.x);
            b.max_x = b.max_x.max(p.x);
            b.min_y = b.min_y.min(p.y);
            b.max_y = b.max_y.max(p.y);
        }
        if b.min_x > b.max_x {
            return Bounds {
                min_x: -1.0,
                max_x: 1.0,
                min_y: -1.0,
                max_y: 1.0,
            };
        }
        b
    }

    fn width(&self) -> f64 {
        pad(self.max_x - self.min_x)
    }

    fn height(&self) -> f64 {
        pad(self.max_y - self.min_y)
    }
}

fn pad(extent: f64) -> f64 {
    if extent > 0.0 {
        extent
    } else {
        1.0
    }
}

fn pair(p: &Point) -> String {
    format!("{},{}", fmt_f64(p.x), fmt_f64(p.y))
}

fn polyline(out: &mut String, class: &str, pts: &[Point]) {
    let coords: Vec<String> = pts.iter().map(pair).collect();
    let _ = writeln!(
        out,
        "    <polyline class=\"{class}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"{}\"/>",
        if class == "spirangle" { "black" } else { "steelblue" },
        coords.join(" ")
    );
}

impl Figure {
    pub fn render(&self) -> String {
        let all = self
            .corners
            .iter()
            .chain(self.arcs.iter().flatten())
            .chain(self.p_star.iter())
            .chain(self.quadruple.iter().flatten());
        let b = Bounds::of(all);
        let (w, h) = (b.width(), b.height());
        let (mx, my) = (0.05 * w, 0.05 * h);
        // data y runs up, so the flipped box spans -max_y ..= -min_y
        let view = [b.min_x - mx, -b.max_y - my, w + 2.0 * mx, h + 2.0 * my];
        let view: Vec<String> = view.iter().map(|v| fmt_f64(*v)).collect();
        let r = 0.01 * w.max(h);

        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"{}\" preserveAspectRatio=\"xMidYMid meet\">",
            view.join(" ")
        );
        out.push_str("  <g transform=\"scale(1,-1)\">\n");
        if let (Some(c), Some((even, odd))) = (self.p_star, self.slopes) {
            let reach = 2.0 * w.hypot(h);
            for (name, m) in [("asymptote-even", even), ("asymptote-odd", odd)] {
                let norm = 1f64.hypot(m);
                let (dx, dy) = (reach / norm, reach * m / norm);
                let ends = [Point::new(c.x - dx, c.y - dy), Point::new(c.x + dx, c.y + dy)];
                let _ = writeln!(
                    out,
                    "    <line class=\"{name}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"4 3\" vector-effect=\"non-scaling-stroke\"/>",
                    fmt_f64(ends[0].x),
                    fmt_f64(ends[0].y),
                    fmt_f64(ends[1].x),
                    fmt_f64(ends[1].y)
                );
            }
        }
        if !self.corners.is_empty() {
            polyline(&mut out, "spirangle", &self.corners);
        }
        for arc in &self.arcs {
            polyline(&mut out, "arc", arc);
        }
        if let Some(q) = &self.quadruple {
            for p in q {
                let _ = writeln!(
                    out,
                    "    <circle class=\"quadruple\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"orange\"/>",
                    fmt_f64(p.x),
                    fmt_f64(p.y),
                    fmt_f64(r * 0.6)
                );
            }
        }
        if let Some(p) = self.p_star {
            let _ = writeln!(
                out,
                "    <circle id=\"p-star\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>",
                fmt_f64(p.x),
                fmt_f64(p.y),
                fmt_f64(r)
            );
        }
        out.push_str("  </g>\n</svg>\n");
        out
    }
}
