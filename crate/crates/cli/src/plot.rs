//! SVG and CSV rendering of the real Folium.
//!
//! Exact arithmetic stops here: the curve is sampled through `p_affine` in
//! double precision, and overlay points and lines are computed exactly by the
//! core crate and converted at the end.

use std::fmt::Write as _;
use std::path::Path;

use folium_core::{FieldElement, Folium, ProjectiveLine, ProjectivePoint};

use crate::error::CliError;

/// Samples with `|t + 1|` below this are dropped; the curve runs off to the
/// asymptote there.
pub const ASYMPTOTE_GAP: f64 = 1e-3;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
}

/// `p_affine(t)` in floating point.
pub fn p_affine_f64(a: f64, t: f64) -> (f64, f64) {
    let d = 1.0 + t * t * t;
    (3.0 * a * t / d, 3.0 * a * t * t / d)
}

/// Evenly spaced samples of `[t_min, t_max]`, split into runs wherever a
/// sample falls inside the gap around `t = -1`.
pub fn sample_curve(
    a: f64,
    t_min: f64,
    t_max: f64,
    samples: usize,
) -> Result<Vec<Vec<Sample>>, CliError> {
    if !(t_min.is_finite() && t_max.is_finite()) || t_min >= t_max {
        return Err(CliError::DegenerateRange(format!("[{t_min}, {t_max}]")));
    }
    if samples < 2 {
        return Err(CliError::DegenerateRange(format!("{samples} samples")));
    }
    let step = (t_max - t_min) / (samples - 1) as f64;
    let mut runs: Vec<Vec<Sample>> = vec![Vec::new()];
    for k in 0..samples {
        let t = if k + 1 == samples {
            t_max
        } else {
            t_min + step * k as f64
        };
        if (t + 1.0).abs() < ASYMPTOTE_GAP {
            if runs.last().is_some_and(|r| !r.is_empty()) {
                runs.push(Vec::new());
            }
            continue;
        }
        let (x, y) = p_affine_f64(a, t);
        runs.last_mut().expect("nonempty").push(Sample { t, x, y });
    }
    runs.retain(|r| !r.is_empty());
    if runs.is_empty() {
        return Err(CliError::DegenerateRange(
            "every sample lies next to t = -1".into(),
        ));
    }
    Ok(runs)
}

/// What to draw on top of the curve, with parameters as exact rationals.
#[derive(Clone, Debug, Default)]
pub struct Overlays {
    pub points: Vec<FieldElement>,
    pub chords: Vec<(FieldElement, FieldElement)>,
    pub tangents: Vec<FieldElement>,
    pub bisector: bool,
    pub asymptote: bool,
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Bounds {
    fn around<'a>(pts: impl IntoIterator<Item = &'a (f64, f64)>) -> Bounds {
        let mut b = Bounds {
            x0: f64::INFINITY,
            x1: f64::NEG_INFINITY,
            y0: f64::INFINITY,
            y1: f64::NEG_INFINITY,
        };
        for &(x, y) in pts {
            b.x0 = b.x0.min(x);
            b.x1 = b.x1.max(x);
            b.y0 = b.y0.min(y);
            b.y1 = b.y1.max(y);
        }
        // pad and make square so that right angles look right
        let half = 0.5 * (b.x1 - b.x0).max(b.y1 - b.y0).max(1e-9) * 1.1;
        let (cx, cy) = (0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
        Bounds {
            x0: cx - half,
            x1: cx + half,
            y0: cy - half,
            y1: cy + half,
        }
    }

    fn to_px(self, x: f64, y: f64) -> (f64, f64) {
        let scale = (SIZE - 2.0 * MARGIN) / (self.x1 - self.x0);
        (
            MARGIN + (x - self.x0) * scale,
            SIZE - MARGIN - (y - self.y0) * scale,
        )
    }

    /// The part of `m x + n y + p = 0` inside the box.
    fn clip(self, m: f64, n: f64, p: f64) -> Option<((f64, f64), (f64, f64))> {
        let mut hits = Vec::new();
        if n != 0.0 {
            for x in [self.x0, self.x1] {
                let y = -(m * x + p) / n;
                if (self.y0..=self.y1).contains(&y) {
                    hits.push((x, y));
                }
            }
        }
        if m != 0.0 {
            for y in [self.y0, self.y1] {
                let x = -(n * y + p) / m;
                if (self.x0..=self.x1).contains(&x) {
                    hits.push((x, y));
                }
            }
        }
        hits.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        match (hits.first(), hits.last()) {
            (Some(&a), Some(&b)) if a != b => Some((a, b)),
            _ => None,
        }
    }
}

fn affine_f64(p: &ProjectivePoint) -> Option<(f64, f64)> {
    let (x, y) = p.to_affine()?;
    Some((x.to_f64()?, y.to_f64()?))
}

fn line_f64(l: &ProjectiveLine) -> Option<(f64, f64, f64)> {
    Some((l.m().to_f64()?, l.n().to_f64()?, l.p().to_f64()?))
}

struct Marked {
    at: (f64, f64),
    label: String,
}

/// Renders the SVG document; byte-identical for identical inputs.
pub fn render_svg(
    curve: &Folium,
    runs: &[Vec<Sample>],
    overlays: &Overlays,
) -> Result<String, CliError> {
    let a = curve.a().to_f64().expect("rational parameter");
    let mut marks: Vec<Marked> = Vec::new();
    let mut lines: Vec<((f64, f64, f64), &'static str)> = Vec::new();

    let mut mark = |p: &ProjectivePoint, label: String| {
        if let Some(at) = affine_f64(p) {
            marks.push(Marked { at, label });
        }
    };
    for t in &overlays.points {
        mark(&curve.p_affine(t)?, format!("t={t}"));
    }
    for (t1, t2) in &overlays.chords {
        let (p1, p2) = (curve.pbar(t1)?, curve.pbar(t2)?);
        let third = curve.third_intersection(&p1, &p2)?;
        let t3 = curve.pbar_inv(&third)?;
        mark(&p1, format!("t={t1}"));
        mark(&p2, format!("t={t2}"));
        mark(&third, format!("t={t3}"));
        lines.extend(line_f64(&curve.chord(&p1, &p2)?).map(|l| (l, "chord")));
    }
    for t in &overlays.tangents {
        let p = curve.pbar(t)?;
        mark(&p, format!("t={t}"));
        lines.extend(line_f64(&curve.tangent_at(&p)?).map(|l| (l, "tangent")));
    }
    if overlays.bisector {
        lines.push(((1.0, -1.0, 0.0), "bisector"));
    }
    if overlays.asymptote {
        lines.push(((1.0, 1.0, a), "asymptote"));
    }

    let curve_pts: Vec<(f64, f64)> = runs.iter().flatten().map(|s| (s.x, s.y)).collect();
    let bounds = Bounds::around(curve_pts.iter().chain(marks.iter().map(|m| &m.at)));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (m, n) in [(0.0, 1.0), (1.0, 0.0)] {
        if let Some(seg) = bounds.clip(m, n, 0.0) {
            push_segment(
                &mut svg,
                bounds,
                seg,
                "axis",
                r##"stroke="#bbbbbb" stroke-width="1""##,
            );
        }
    }
    for run in runs {
        let pts: Vec<String> = run
            .iter()
            .map(|s| {
                let (px, py) = bounds.to_px(s.x, s.y);
                format!("{px:.3},{py:.3}")
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="curve" fill="none" stroke="black" stroke-width="2" points="{}"/>"#,
            pts.join(" ")
        );
    }
    for ((m, n, p), class) in lines {
        let style = match class {
            "asymptote" => r##"stroke="#777777" stroke-width="1" stroke-dasharray="6 4""##,
            "bisector" => r##"stroke="#3366cc" stroke-width="1""##,
            _ => r##"stroke="#cc3333" stroke-width="1.5""##,
        };
        if let Some(seg) = bounds.clip(m, n, p) {
            push_segment(&mut svg, bounds, seg, class, style);
        }
    }
    for Marked { at, label } in &marks {
        let (px, py) = bounds.to_px(at.0, at.1);
        let _ = writeln!(
            svg,
            r##"<circle class="point" cx="{px:.3}" cy="{py:.3}" r="4" fill="#cc3333"/>"##
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.3}" y="{:.3}" font-size="12" font-family="monospace">{label}</text>"#,
            px + 6.0,
            py - 6.0
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn push_segment(
    svg: &mut String,
    b: Bounds,
    seg: ((f64, f64), (f64, f64)),
    class: &str,
    style: &str,
) {
    let (x1, y1) = b.to_px(seg.0 .0, seg.0 .1);
    let (x2, y2) = b.to_px(seg.1 .0, seg.1 .1);
    let _ = writeln!(
        svg,
        r#"<line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" {style}/>"#
    );
}

pub fn write_csv(path: &Path, runs: &[Vec<Sample>]) -> Result<(), CliError> {
    let fail = |e: csv::Error| CliError::FileWrite {
        path: path.to_path_buf(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_path(path).map_err(fail)?;
    w.write_record(["t", "x", "y"]).map_err(fail)?;
    for s in runs.iter().flatten() {
        w.write_record([s.t.to_string(), s.x.to_string(), s.y.to_string()])
            .map_err(fail)?;
    }
    w.flush().map_err(|source| CliError::FileWrite {
        path: path.to_path_buf(),
        source,
    })
}
