use std::fmt::Write as _;

use folium_core::{Field, FieldElement, Folium, FoliumError, ProjectivePoint};
use serde::Serialize;

use crate::args::{Cli, Command, Format, PlotArgs};
use crate::error::{exit, CliError};
use crate::plot;
use crate::verify;

/// What a command printed and the status it should exit with.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

/// A command result as key-value pairs, rendered as text lines or JSON.
#[derive(Default, Serialize)]
#[serde(transparent)]
struct Fields(serde_json::Map<String, serde_json::Value>);

impl Fields {
    fn with(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("plain data");
        self.0.insert(key.to_string(), v);
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.0).expect("plain data");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                for (k, v) in &self.0 {
                    let shown = match v {
                        serde_json::Value::String(text) => text.clone(),
                        serde_json::Value::Array(items) => items
                            .iter()
                            .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_string))
                            .collect::<Vec<_>>()
                            .join(", "),
                        other => other.to_string(),
                    };
                    let _ = writeln!(s, "{k}: {shown}");
                }
                s
            }
        }
    }
}

fn display<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

struct Context {
    field: Field,
    curve: Folium,
}

impl Context {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let field: Field = cli.field.parse()?;
        let a = field.parse_element(&cli.a)?;
        let curve = Folium::new(a)?;
        Ok(Context { field, curve })
    }

    fn element(&self, s: &str) -> Result<FieldElement, CliError> {
        Ok(self.field.parse_element(s)?)
    }

    /// Parses a point literal and checks that it lies on the curve.
    fn point(&self, s: &str) -> Result<ProjectivePoint, CliError> {
        let p = ProjectivePoint::parse(self.field, s).map_err(|e| match e {
            FoliumError::Field(fe) => CliError::Usage(fe.to_string()),
            FoliumError::InvalidPointLiteral(_) | FoliumError::ZeroVector => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Domain(other),
        })?;
        self.curve.check(&p)?;
        Ok(p)
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = Context::new(cli)?;
    let c = &ctx.curve;
    let ok = |fields: Fields| Outcome {
        output: fields.render(cli.format),
        exit_code: exit::OK,
    };
    Ok(match &cli.command {
        Command::Eval { map, t } => {
            let t = ctx.element(t)?;
            let point = c.parametrize(*map, &t)?;
            ok(Fields::default()
                .with("map", map.name())
                .with("t", t.to_string())
                .with("point", point.to_string()))
        }
        Command::Op { law, p, q } => {
            let (p, q) = (ctx.point(p)?, ctx.point(q)?);
            let r = c.compose(*law, &p, &q)?;
            ok(Fields::default()
                .with("law", law.name())
                .with("result", r.to_string()))
        }
        Command::Inv { law, p } => {
            let p = ctx.point(p)?;
            ok(Fields::default()
                .with("law", law.name())
                .with("inverse", c.inverse(*law, &p)?.to_string()))
        }
        Command::Perp { p } => {
            let p = ctx.point(p)?;
            ok(Fields::default().with("perp", c.perp(&p)?.to_string()))
        }
        Command::Chord { p1, p2 } => {
            let (p1, p2) = (ctx.point(p1)?, ctx.point(p2)?);
            let line = c.chord(&p1, &p2)?;
            let third = c.third_intersection(&p1, &p2)?;
            ok(Fields::default()
                .with("line", line.to_string())
                .with("kind", if p1 == p2 { "tangent" } else { "chord" })
                .with("third", third.to_string())
                .with("product", c.proj_mul(&p1, &p2)?.to_string())
                .with("star_product", c.star_mul(&p1, &p2)?.to_string()))
        }
        Command::Collinear { p1, p2, p3 } => {
            let pts = [ctx.point(p1)?, ctx.point(p2)?, ctx.point(p3)?];
            let holds = c.collinear3(&pts[0], &pts[1], &pts[2])?;
            let identity = pts.iter().fold(ctx.field.one(), |acc, p| acc * p.x())
                + pts.iter().fold(ctx.field.one(), |acc, p| acc * p.y());
            let slopes = pts
                .iter()
                .map(|p| c.pbar_inv(p))
                .collect::<Result<Vec<_>, _>>()?;
            let product = slopes.iter().fold(ctx.field.one(), |acc, t| acc * t);
            ok(Fields::default()
                .with("collinear", holds)
                .with("identity", identity.to_string())
                .with("slopes", display(&slopes))
                .with("slope_product", product.to_string())
                .with(
                    "determinant",
                    verify::det3(&pts[0], &pts[1], &pts[2]).to_string(),
                ))
        }
        Command::Branch { p } => {
            let p = ctx.point(p)?;
            ok(Fields::default().with("branch", c.classify_branch(&p)?.name()))
        }
        Command::Count => {
            let pts = c.enumerate_points()?;
            let p = ctx
                .field
                .modulus()
                .expect("enumeration implies a finite field");
            let matches = pts.len() as u64 == p;
            Outcome {
                output: Fields::default()
                    .with("field", ctx.field.to_string())
                    .with("a", c.a().to_string())
                    .with("enumerated", pts.len())
                    .with("predicted", p)
                    .with("match", matches)
                    .render(cli.format),
                exit_code: if matches {
                    exit::OK
                } else {
                    exit::VERIFICATION_FAILED
                },
            }
        }
        Command::Verify { suite, samples } => {
            let report = verify::run(c, *suite, cli.seed, *samples);
            let output = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("plain data");
                    s.push('\n');
                    s
                }
                Format::Text => render_report(&report),
            };
            Outcome {
                output,
                exit_code: if report.passed() {
                    exit::OK
                } else {
                    exit::VERIFICATION_FAILED
                },
            }
        }
        Command::Plot(args) => plot_command(&ctx, args)?,
    })
}

fn render_report(report: &verify::Report) -> String {
    let mut s = format!(
        "suite {} over {} with a = {} (seed {})\n",
        report.suite, report.field, report.a, report.seed
    );
    for p in &report.properties {
        let status = if p.passed { "PASS" } else { "FAIL" };
        let _ = write!(s, "{status} {} ({} instances)", p.name, p.instances);
        if let Some(cx) = &p.counterexample {
            let _ = write!(s, " counterexample: {cx}");
        }
        s.push('\n');
    }
    for skip in &report.skipped {
        let _ = writeln!(s, "SKIP {}: {}", skip.suite, skip.reason);
    }
    let failed = report.failures().count();
    let _ = writeln!(s, "{} properties, {failed} failed", report.properties.len());
    s
}

fn plot_command(ctx: &Context, args: &PlotArgs) -> Result<Outcome, CliError> {
    let c = &ctx.curve;
    if ctx.field.is_finite() {
        return Err(FoliumError::UnorderedField(ctx.field).into());
    }
    let mut overlays = plot::Overlays {
        bisector: args.bisector,
        asymptote: args.asymptote,
        ..plot::Overlays::default()
    };
    for t in &args.points {
        overlays.points.push(ctx.element(t)?);
    }
    for pair in &args.chords {
        let (t1, t2) = pair
            .split_once(',')
            .ok_or_else(|| CliError::Usage(format!("chord `{pair}` is not of the form t1,t2")))?;
        overlays
            .chords
            .push((ctx.element(t1.trim())?, ctx.element(t2.trim())?));
    }
    for t in &args.tangents {
        overlays.tangents.push(ctx.element(t)?);
    }

    let a = c.a().to_f64().expect("rational parameter");
    let runs = plot::sample_curve(a, args.t_min, args.t_max, args.samples)?;
    let svg = plot::render_svg(c, &runs, &overlays)?;
    if let Some(path) = &args.csv {
        plot::write_csv(path, &runs)?;
    }
    let output = match &args.out {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|source| CliError::FileWrite {
                path: path.clone(),
                source,
            })?;
            String::new()
        }
        None => svg,
    };
    Ok(Outcome {
        output,
        exit_code: exit::OK,
    })
}
