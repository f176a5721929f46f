use std::path::PathBuf;

use exponacci::continuation::{classify_curve, sample_curve};
use exponacci::identities::{fuzz_identity, FuzzConfig, IdentityKind, IdentityReport};
use exponacci::spiral::{
    arc_spec, asymptote_slopes, corner_points, intersection_point, intersection_quadruple,
    spatial_points, AmplitudeMode, ZMode,
};
use exponacci::sums::{alternating_sum, gamma_n, partial_sum};
use exponacci::{g_iterative, ArcPoint, Params, Point, Sequence, SumForm, Winding};
use serde::Serialize;

use crate::config::{
    resolve_seed, AmplitudeChoice, Format, ParamsConfig, RunConfig, Style, WindingChoice,
};
use crate::error::{CliError, EXIT_VERIFY};
use crate::output::{emit, fmt_f64, to_json, Cell, Num, Table};
use crate::svg::Figure;
use crate::{Command, Common};

pub const DEFAULT_N: u64 = 10;
pub const DEFAULT_CORNERS: u64 = 12;
pub const DEFAULT_ARCS: u64 = 8;
pub const DEFAULT_SAMPLES: u32 = 60;
pub const DEFAULT_T_MAX: f64 = 10.0;
pub const DEFAULT_STEP: f64 = 0.01;
const MAX_CURVE_STEPS: f64 = 1e7;
const VERIFY_TOLERANCE: f64 = 1e-8;

struct Ctx {
    config: RunConfig,
    params: Params,
    format: Option<Format>,
    out: Option<PathBuf>,
}

impl Ctx {
    fn format(&self, allowed: &[Format], command: &str) -> Result<Format, CliError> {
        let f = self.format.unwrap_or(allowed[0]);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let names: Vec<&str> = allowed.iter().map(|f| f.name()).collect();
            Err(CliError::incompatible(format!(
                "{command} does not support --format {}; use one of {}",
                f.name(),
                names.join(", ")
            )))
        }
    }

    fn emit(&self, bytes: &[u8]) -> Result<(), CliError> {
        emit(self.out.as_deref(), bytes)
    }
}

pub fn run(common: &Common, flags: ParamsConfig, command: &Command) -> Result<u8, CliError> {
    let config = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let params = config.params(&flags);
    params.validate()?;
    let ctx = Ctx {
        format: common.format.or(config.format),
        out: common.out.clone().or_else(|| config.out.clone()),
        params,
        config,
    };
    let cfg = &ctx.config;
    match command {
        Command::Seq { n } => seq(&ctx, n.or(cfg.n).unwrap_or(DEFAULT_N)),
        Command::Sums { n } => sums(&ctx, n.or(cfg.n).unwrap_or(DEFAULT_N)),
        Command::Spiral {
            style,
            corners,
            arcs,
            samples,
            winding,
            z_mode,
            amplitude,
            quadruple,
            csv,
        } => {
            let style = style.or(cfg.style).unwrap_or(Style::Both);
            let corners = corners.or(cfg.corners);
            let arcs = arcs.or(cfg.arcs);
            if corners.is_some() && !style.rect() {
                return Err(CliError::incompatible("--corners needs style rect or both"));
            }
            if arcs.is_some() && !style.arch() {
                return Err(CliError::incompatible("--arcs needs style arch or both"));
            }
            let opts = SpiralOpts {
                corners: style.rect().then(|| corners.unwrap_or(DEFAULT_CORNERS)),
                arcs: if style.arch() { arcs.unwrap_or(DEFAULT_ARCS) } else { 0 },
                samples: samples.or(cfg.samples).unwrap_or(DEFAULT_SAMPLES),
                winding: winding.or(cfg.winding).unwrap_or(WindingChoice::Auto),
                z_mode: z_mode.or(cfg.z_mode).map(ZMode::from),
                amplitude: amplitude.or(cfg.amplitude).unwrap_or(AmplitudeChoice::C).into(),
                quadruple: quadruple.or(cfg.quadruple),
                csv: csv.clone().or_else(|| cfg.csv.clone()),
            };
            spiral(&ctx, &opts)
        }
        Command::Curve { t_max, step } => curve(
            &ctx,
            t_max.or(cfg.t_max).unwrap_or(DEFAULT_T_MAX),
            step.or(cfg.step).unwrap_or(DEFAULT_STEP),
        ),
        Command::Verify {
            identity,
            samples,
            seed,
            max_index,
        } => {
            let name = identity.clone().or_else(|| cfg.identity.clone());
            let kinds = identities(name.as_deref().unwrap_or("all"))?;
            let fuzz = FuzzConfig {
                samples: samples.or(cfg.fuzz_samples).unwrap_or(1000),
                seed: resolve_seed(*seed, cfg.seed)?,
                max_index: max_index.or(cfg.max_index).unwrap_or(10),
                tolerance: VERIFY_TOLERANCE,
            };
            verify(&ctx, &kinds, &fuzz)
        }
    }
}

fn write_table(ctx: &Ctx, table: &Table, command: &str) -> Result<u8, CliError> {
    let bytes = match ctx.format(&[Format::Csv, Format::Text, Format::Json], command)? {
        Format::Text => table.to_text(),
        Format::Json => table.to_json(),
        _ => table.to_csv(),
    };
    ctx.emit(&bytes)?;
    Ok(0)
}

fn seq(ctx: &Ctx, n_max: u64) -> Result<u8, CliError> {
    let s = Sequence::new(ctx.params)?;
    let mut t = Table::new(vec!["n", "g_iterative", "g_closed", "h", "residual"]);
    for n in 0..=n_max {
        let it = g_iterative(&ctx.params, n);
        let closed = s.g(n as i64)?;
        let residual = (it - closed).abs() / 1f64.max(it.abs());
        t.push(vec![
            Cell::Int(n as i64),
            Cell::Float(it),
            Cell::Float(closed),
            Cell::Float(s.h(n as i64)?),
            Cell::Float(residual),
        ]);
    }
    write_table(ctx, &t, "seq")
}

fn sums(ctx: &Ctx, n_max: u64) -> Result<u8, CliError> {
    let s = Sequence::new(ctx.params)?;
    let mut t = Table::new(vec![
        "n", "g", "sum_a", "sum_b", "sum_c", "alt_a", "alt_b", "alt_c", "gamma",
    ]);
    for n in 0..=n_max {
        let mut row = vec![Cell::Int(n as i64), Cell::Float(s.g(n as i64)?)];
        for form in SumForm::ALL {
            row.push(Cell::Float(partial_sum(&s, n, form)?));
        }
        for form in SumForm::ALL {
            row.push(Cell::Float(alternating_sum(&s, n, form)?));
        }
        row.push(Cell::Float(gamma_n(&s, n)?.value));
        t.push(row);
    }
    write_table(ctx, &t, "sums")
}

struct SpiralOpts {
    corners: Option<u64>,
    arcs: u64,
    samples: u32,
    winding: WindingChoice,
    z_mode: Option<ZMode>,
    amplitude: AmplitudeMode,
    quadruple: Option<u64>,
    csv: Option<PathBuf>,
}

#[derive(Serialize)]
struct JsonPoint {
    x: Num,
    y: Num,
}

impl From<Point> for JsonPoint {
    fn from(p: Point) -> Self {
        JsonPoint {
            x: Num(p.x),
            y: Num(p.y),
        }
    }
}

#[derive(Serialize)]
struct JsonSample {
    n: u64,
    i: u32,
    x: Num,
    y: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    z: Option<Num>,
}

#[derive(Serialize)]
struct JsonArc {
    n: u64,
    center_index: i64,
    center: JsonPoint,
    e_x: Num,
    e_y: Num,
    points: Vec<JsonSample>,
}

#[derive(Serialize)]
struct JsonQuadruple {
    n: u64,
    points: Vec<JsonPoint>,
    converged: bool,
    max_drift: Num,
}

#[derive(Serialize)]
struct JsonSpiral {
    gamma: Num,
    winding: Winding,
    p_star: JsonPoint,
    slopes: Option<[Num; 2]>,
    corners: Vec<JsonSample>,
    arcs: Vec<JsonArc>,
    quadruple: Option<JsonQuadruple>,
}

fn resolve_winding(choice: WindingChoice, actual: Winding) -> Result<Winding, CliError> {
    match (choice, actual) {
        (WindingChoice::Auto, w) => Ok(w),
        (WindingChoice::Inwinding, Winding::Inwinding) => Ok(Winding::Inwinding),
        (WindingChoice::Outwinding, w) if w != Winding::Inwinding => Ok(Winding::Outwinding),
        (c, w) => Err(CliError::incompatible(format!(
            "--winding {} conflicts with these parameters, which are {}",
            if c == WindingChoice::Inwinding { "inwinding" } else { "outwinding" },
            match w {
                Winding::Inwinding => "inwinding",
                Winding::Outwinding => "outwinding",
                Winding::Cyclic => "cyclic",
            }
        ))),
    }
}

fn lift(
    s: &Sequence,
    pts: &[ArcPoint],
    opts: &SpiralOpts,
) -> Result<Vec<Option<f64>>, CliError> {
    match opts.z_mode {
        None => Ok(vec![None; pts.len()]),
        Some(z) => Ok(spatial_points(s, pts, opts.samples, z, opts.amplitude)?
            .into_iter()
            .map(|p| Some(p.z))
            .collect()),
    }
}

fn spiral(ctx: &Ctx, opts: &SpiralOpts) -> Result<u8, CliError> {
    let format = ctx.format(&[Format::Svg, Format::Csv, Format::Json], "spiral")?;
    let s = Sequence::new(ctx.params)?;
    let class = s.classify();
    let winding = resolve_winding(opts.winding, class.winding)?;
    if opts.samples < 2 {
        return Err(CliError::invalid("--samples must be at least 2"));
    }

    let corners = match opts.corners {
        Some(n) => corner_points(&s, n)?,
        None => Vec::new(),
    };
    let corner_flat: Vec<ArcPoint> = corners
        .iter()
        .map(|c| ArcPoint {
            n: c.n,
            i: 0,
            x: c.x,
            y: c.y,
        })
        .collect();
    let corner_z = lift(&s, &corner_flat, opts)?;

    let specs = (1..=opts.arcs)
        .map(|n| arc_spec(&s, n, opts.samples, winding))
        .collect::<exponacci::Result<Vec<_>>>()?;
    let arc_pts: Vec<Vec<ArcPoint>> = specs.iter().map(|a| a.points()).collect();
    let arc_z = arc_pts
        .iter()
        .map(|pts| lift(&s, pts, opts))
        .collect::<Result<Vec<_>, _>>()?;

    let p_star = intersection_point(&s)?;
    let slopes = asymptote_slopes(&class).ok();
    let quad = match opts.quadruple {
        Some(n) => Some((n, intersection_quadruple(&s, n)?)),
        None => None,
    };

    let mut headers = vec!["kind", "n", "i", "x", "y"];
    if opts.z_mode.is_some() {
        headers.push("z");
    }
    let mut table = Table::new(headers);
    let row = |kind, n: u64, i: u32, x, y, z: Option<f64>| {
        let mut r = vec![
            Cell::Text(kind),
            Cell::Int(n as i64),
            Cell::Int(i as i64),
            Cell::Float(x),
            Cell::Float(y),
        ];
        if opts.z_mode.is_some() {
            r.push(z.map_or(Cell::Empty, Cell::Float));
        }
        r
    };
    for (p, z) in corner_flat.iter().zip(&corner_z) {
        table.push(row("corner", p.n, 0, p.x, p.y, *z));
    }
    for (pts, zs) in arc_pts.iter().zip(&arc_z) {
        for (p, z) in pts.iter().zip(zs) {
            table.push(row("arc", p.n, p.i, p.x, p.y, *z));
        }
    }
    if let Some((n, q)) = &quad {
        for (j, p) in q.quadruple.iter().flatten().enumerate() {
            table.push(row("quadruple", *n, j as u32, p.x, p.y, None));
        }
    }

    if let Some(path) = &opts.csv {
        emit(Some(path), &table.to_csv())?;
    }

    let bytes = match format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let sample = |p: &ArcPoint, z: &Option<f64>| JsonSample {
                n: p.n,
                i: p.i,
                x: Num(p.x),
                y: Num(p.y),
                z: z.map(Num),
            };
            let doc = JsonSpiral {
                gamma: Num(class.gamma),
                winding: class.winding,
                p_star: p_star.into(),
                slopes: slopes.map(|(e, o)| [Num(e), Num(o)]),
                corners: corner_flat.iter().zip(&corner_z).map(|(p, z)| sample(p, z)).collect(),
                arcs: specs
                    .iter()
                    .zip(arc_pts.iter().zip(&arc_z))
                    .map(|(a, (pts, zs))| JsonArc {
                        n: a.n,
                        center_index: a.center_index,
                        center: a.center.into(),
                        e_x: Num(a.e_x),
                        e_y: Num(a.e_y),
                        points: pts.iter().zip(zs).map(|(p, z)| sample(p, z)).collect(),
                    })
                    .collect(),
                quadruple: quad.as_ref().map(|(n, q)| JsonQuadruple {
                    n: *n,
                    points: q.quadruple.iter().flatten().map(|p| (*p).into()).collect(),
                    converged: q.converged,
                    max_drift: Num(q.max_drift().unwrap_or(f64::NAN)),
                }),
            };
            to_json(&doc)
        }
        _ => Figure {
            corners: corners.iter().map(|c| c.point()).collect(),
            arcs: arc_pts
                .iter()
                .map(|pts| pts.iter().map(|p| Point::new(p.x, p.y)).collect())
                .collect(),
            p_star: Some(p_star),
            slopes,
            quadruple: quad.and_then(|(_, q)| q.quadruple),
        }
        .render()
        .into_bytes(),
    };
    ctx.emit(&bytes)?;
    Ok(0)
}

fn curve(ctx: &Ctx, t_max: f64, step: f64) -> Result<u8, CliError> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(CliError::invalid(format!("--t-max must be positive, got {t_max}")));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::invalid(format!("--step must be positive, got {step}")));
    }
    let steps = (t_max / step).round();
    if steps < 1.0 || steps > MAX_CURVE_STEPS {
        return Err(CliError::invalid(format!(
            "--t-max / --step gives {steps} steps, allowed 1 ..= {MAX_CURVE_STEPS}"
        )));
    }
    if (steps * step - t_max).abs() > 1e-9 * t_max {
        return Err(CliError::invalid(format!(
            "--t-max {t_max} is not a whole multiple of --step {step}"
        )));
    }
    let s = Sequence::new(ctx.params)?;
    classify_curve(&s)?;
    let samples = sample_curve(&s, t_max, steps as u32)?;
    let mut t = Table::new(vec!["t", "re", "im", "n", "g_n"]);
    for z in samples {
        let (n, g) = if z.t.fract() == 0.0 {
            (Cell::Int(z.t as i64), Cell::Float(g_iterative(&ctx.params, z.t as u64)))
        } else {
            (Cell::Empty, Cell::Empty)
        };
        t.push(vec![Cell::Float(z.t), Cell::Float(z.re), Cell::Float(z.im), n, g]);
    }
    write_table(ctx, &t, "curve")
}

fn identities(name: &str) -> Result<Vec<IdentityKind>, CliError> {
    if name == "all" {
        return Ok(IdentityKind::CHECKS.to_vec());
    }
    IdentityKind::from_name(name).map(|k| vec![k]).ok_or_else(|| {
        let names: Vec<&str> = IdentityKind::CHECKS.iter().map(|k| k.name()).collect();
        CliError::invalid(format!(
            "unknown identity {name:?}; expected one of {}, all",
            names.join(", ")
        ))
    })
}

#[derive(Serialize)]
struct JsonWorst {
    params: [Num; 6],
    indices: Vec<i64>,
}

#[derive(Serialize)]
struct JsonReport {
    name: String,
    passed: bool,
    samples: usize,
    rejected: usize,
    failures: usize,
    tolerance: Num,
    max_rel_residual: Num,
    worst_case: Option<JsonWorst>,
}

fn params_array(p: &Params) -> [f64; 6] {
    [p.a, p.b, p.c, p.d, p.g0, p.g1]
}

fn report_line(r: &IdentityReport) -> String {
    let mut line = format!(
        "{:<18} {}  samples={} rejected={} failures={} max_rel_residual={}\n",
        r.name,
        if r.passed() { "PASS" } else { "FAIL" },
        r.samples,
        r.rejected,
        r.failures,
        fmt_f64(r.max_rel_residual)
    );
    if let Some(w) = &r.worst_case {
        let p: Vec<String> = params_array(&w.params).iter().map(|x| fmt_f64(*x)).collect();
        let idx: Vec<String> = w.indices.iter().map(i64::to_string).collect();
        line.push_str(&format!(
            "  worst case: params=({}) indices=[{}]\n",
            p.join(", "),
            idx.join(", ")
        ));
    }
    line
}

fn verify(ctx: &Ctx, kinds: &[IdentityKind], fuzz: &FuzzConfig) -> Result<u8, CliError> {
    let format = ctx.format(&[Format::Text, Format::Json], "verify")?;
    if fuzz.samples == 0 {
        return Err(CliError::invalid("--samples must be positive"));
    }
    if fuzz.max_index < 0 {
        return Err(CliError::invalid("--max-index must not be negative"));
    }
    let reports = kinds
        .iter()
        .map(|k| fuzz_identity(*k, fuzz))
        .collect::<exponacci::Result<Vec<_>>>()?;
    let bytes = match format {
        Format::Json => {
            let doc: Vec<JsonReport> = reports
                .iter()
                .map(|r| JsonReport {
                    name: r.name.clone(),
                    passed: r.passed(),
                    samples: r.samples,
                    rejected: r.rejected,
                    failures: r.failures,
                    tolerance: Num(r.tolerance),
                    max_rel_residual: Num(r.max_rel_residual),
                    worst_case: r.worst_case.as_ref().map(|w| JsonWorst {
                        params: params_array(&w.params).map(Num),
                        indices: w.indices.clone(),
                    }),
                })
                .collect();
            to_json(&doc)
        }
        _ => {
            let mut text = format!("seed={} tolerance={}\n", fuzz.seed, fmt_f64(fuzz.tolerance));
            for r in &reports {
                text.push_str(&report_line(r));
            }
            text.into_bytes()
        }
    };
    ctx.emit(&bytes)?;
    Ok(if reports.iter().all(IdentityReport::passed) {
        0
    } else {
        EXIT_VERIFY
    })
}
