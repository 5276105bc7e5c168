use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use folium_core::{LawKind, ParamKind};

use crate::verify::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "folium",
    version,
    about = "Exact arithmetic on the Folium of Descartes x^3 + y^3 = 3a xyz"
)]
pub struct Cli {
    /// Base field: `q` for the rationals or `fp:<p>` for a prime field.
    #[arg(long, global = true, default_value = "q")]
    pub field: String,

    /// Curve parameter, a nonzero field element such as `2` or `-3/4`.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub a: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized verification.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a parametrization at a field element.
    Eval {
        /// pbar, pbarbar, paffine or paffineprime.
        #[arg(long)]
        map: ParamKind,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Compose two points under a law.
    Op {
        /// projmul, projmul2, star, addsouth, addwest, southmul, westmul or fieldmul.
        #[arg(long)]
        law: LawKind,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Inverse of a point under a law.
    Inv {
        #[arg(long)]
        law: LawKind,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// The involution pbar(t) -> pbar(-1/t).
    Perp {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Chord (or tangent) through two points and its third intersection.
    Chord {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
    },
    /// Test the identity x1 x2 x3 + y1 y2 y3 = 0 for three points.
    Collinear {
        #[arg(allow_hyphen_values = true)]
        p1: String,
        #[arg(allow_hyphen_values = true)]
        p2: String,
        #[arg(allow_hyphen_values = true)]
        p3: String,
    },
    /// Branch label of a rational point.
    Branch {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Brute-force point count over a prime field.
    Count,
    /// Run property suites and report each property.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Random instances per property when exhaustive checking is out of reach.
        #[arg(long, default_value_t = crate::verify::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Render the real curve as SVG (and optionally CSV).
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, default_value_t = -0.9, allow_hyphen_values = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
    pub t_max: f64,
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    /// Mark the point with this parameter (repeatable).
    #[arg(long = "point", allow_hyphen_values = true)]
    pub points: Vec<String>,
    /// Draw the chord through two parameters given as `t1,t2` (repeatable).
    #[arg(long = "chord", allow_hyphen_values = true)]
    pub chords: Vec<String>,
    /// Draw the tangent at this parameter (repeatable).
    #[arg(long = "tangent", allow_hyphen_values = true)]
    pub tangents: Vec<String>,
    /// Draw the first bisector x = y.
    #[arg(long)]
    pub bisector: bool,
    /// Draw the asymptote x + y + a = 0, dashed.
    #[arg(long)]
    pub asymptote: bool,
    /// SVG output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the samples as CSV (columns t, x, y).
    #[arg(long)]
    pub csv: Option<PathBuf>,
}
