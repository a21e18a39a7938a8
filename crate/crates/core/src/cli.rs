//! The `spiral` command line.
//!
//! Every subcommand prints its numbers to stdout as a `name,n,re,im` table
//! (or the JSON equivalent with `--format json`) and writes an artifact when
//! `--out` is given; the file extension picks SVG, CSV or JSON. Diagnostics
//! go to stderr.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 an accelerated sum did
//! not converge or the requested series diverges.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::convergence::{classify_with, limit_point, orbit_center, ConvergenceClass};
use crate::error::Error;
use crate::intersect::{self_intersections, IntersectSettings};
use crate::lengthfns::LengthFunction;
use crate::numerics::{AcceleratedSum, AccelerationSettings, Strategy};
use crate::render::{
    convergence_figure, export_table, orbit_figure, q_figure, render_svg, spiral_figure, telescoping_figure,
    Figure, FigureSettings, TableFormat, TableRow,
};
use crate::spiral::{interpolated_vertex, ComplexPoint};
use crate::telescoping::{
    center_closed, q_closed, q_limit_at_one, vertex_closed, verify_telescoping_identity, TelescopingConstants,
};

/// Tolerance for checks against closed forms.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;
/// Default target tolerance of accelerated limits.
pub const LIMIT_TOLERANCE: f64 = 1e-8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "spiral", version, about = "Regular n-gon spirals: vertices, limits, closed forms and figures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for TableFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => TableFormat::Csv,
            Format::Json => TableFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Euler,
    Paired,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveArg {
    Centers,
    Q,
}

#[derive(Debug, Args)]
struct Output {
    /// Write an artifact; `.svg`, `.csv` or `.json`.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format of the table echoed to stdout.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct Accel {
    #[arg(long, default_value_t = LIMIT_TOLERANCE)]
    tol: f64,
    /// Cap on accelerated tail terms.
    #[arg(long, default_value_t = 400)]
    max_terms: usize,
    #[arg(long, value_enum, default_value = "euler")]
    strategy: StrategyArg,
}

impl Accel {
    fn settings(&self) -> crate::Result<AccelerationSettings> {
        let strategy = match self.strategy {
            StrategyArg::Euler => Strategy::EulerTransform,
            StrategyArg::Paired => Strategy::PairedTerms,
            StrategyArg::Direct => Strategy::DirectPartialSums,
        };
        AccelerationSettings::new(self.tol, self.max_terms, strategy)
    }
}

fn parse_length(s: &str) -> Result<LengthFunction, String> {
    s.parse::<LengthFunction>().map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polygons, vertices, centers and interpolant of one spiral.
    Build {
        #[arg(long, value_parser = parse_length, default_value = "power:1")]
        length: LengthFunction,
        #[arg(long, default_value_t = 9)]
        max_n: u64,
        #[command(flatten)]
        output: Output,
    },
    /// The limit W(s) of the power-law spiral with side lengths n^-s.
    Limit {
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[command(flatten)]
        accel: Accel,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Point, CircularOrbit or Divergent.
    Classify {
        #[arg(long, value_parser = parse_length)]
        length: LengthFunction,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// The s = 0 spiral, its limiting circle and the circle's center.
    Orbit {
        #[arg(long, default_value_t = 60)]
        max_n: u64,
        #[arg(long, default_value_t = LIMIT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        output: Output,
    },
    /// The curve of limits W(s) over a range of s.
    Curve {
        #[arg(long, default_value_t = 0.0000726)]
        s_min: f64,
        #[arg(long, default_value_t = 1.77)]
        s_max: f64,
        #[arg(long, default_value_t = 40)]
        samples: usize,
        /// Spirals drawn with limits equally spaced along the curve.
        #[arg(long, default_value_t = 10)]
        spirals: usize,
        #[command(flatten)]
        output: Output,
    },
    /// The telescoping spiral; `--check` verifies its closed forms.
    Telescope {
        #[arg(long)]
        check: bool,
        /// Largest index checked (with `--check`) or drawn.
        #[arg(long)]
        n_max: Option<u64>,
        /// Draw Q_L instead of the polygons and centers.
        #[arg(long)]
        q: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Self-intersections of C_L or Q_L.
    Intersect {
        #[arg(long, value_enum, default_value = "centers")]
        curve: CurveArg,
        #[arg(long, default_value_t = 1.05)]
        lo: f64,
        #[arg(long, default_value_t = 6.0)]
        hi: f64,
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        #[arg(long, default_value_t = CLOSED_FORM_TOLERANCE)]
        tol: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// The interpolated vertex at a real index.
    Interp {
        #[arg(long, value_parser = parse_length)]
        length: LengthFunction,
        #[arg(long)]
        n: f64,
        #[command(flatten)]
        accel: Accel,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    NotConverged(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Divergent(_) => Failure::NotConverged(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn table(&mut self, rows: &[TableRow], format: Format) -> Outcome {
        self.out
            .write_all(export_table(rows, format.into()).as_bytes())
            .map_err(|e| Failure::Usage(e.to_string()))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn converged(sum: &AcceleratedSum, what: &str) -> Outcome {
    if sum.converged {
        Ok(())
    } else {
        Err(Failure::NotConverged(format!(
            "{what} did not converge after {} terms (error estimate {:e})",
            sum.terms_used, sum.error_estimate
        )))
    }
}

fn write_artifact(path: &Path, figure: &Figure) -> Outcome {
    let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    let text = match ext.as_deref() {
        Some("svg") => render_svg(&figure.scene)?,
        Some("csv") => export_table(&figure.rows, TableFormat::Csv),
        Some("json") => export_table(&figure.rows, TableFormat::Json),
        _ => {
            return Err(Failure::Usage(format!(
                "cannot tell the output format of {} (use .svg, .csv or .json)",
                path.display()
            )))
        }
    };
    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit_figure(io: &mut Io, figure: &Figure, output: &Output) -> Outcome {
    if let Some(path) = &output.out {
        write_artifact(path, figure)?;
        io.note(&format!("wrote {}", path.display()));
    }
    io.table(&figure.rows, output.format)?;
    if figure.converged {
        Ok(())
    } else {
        Err(Failure::NotConverged("some accelerated sums did not converge".into()))
    }
}

fn figure_settings(tol: f64) -> crate::Result<FigureSettings> {
    Ok(FigureSettings {
        acceleration: AccelerationSettings::default().with_tolerance(tol)?,
        ..FigureSettings::default()
    })
}

fn telescope_check(io: &mut Io, n_max: u64) -> Result<bool, Failure> {
    let tol = CLOSED_FORM_TOLERANCE;
    let mut checks: Vec<(&str, f64, f64)> = Vec::new();

    let identity = verify_telescoping_identity(n_max)?;
    checks.push(("identity", identity.max_residual(), tol));

    let mut circle: f64 = 0.0;
    for i in 1..=10_000 {
        let n = 1.01 + (100.0 - 1.01) * i as f64 / 10_000.0;
        circle = circle.max(((vertex_closed(n)? + 1.0).norm() - 1.0).abs());
    }
    checks.push(("unit-circle", circle, 1e-12));

    let phi = TelescopingConstants::PHI;
    checks.push(("golden-crossing", (center_closed(phi)? - center_closed(phi + 1.0)?).norm(), tol));

    let zeros = q_closed(TelescopingConstants::ZERO_LOW)?
        .norm()
        .max(q_closed(TelescopingConstants::ZERO_HIGH)?.norm());
    checks.push(("q-zeros", zeros, tol));

    let q_limit = q_limit_at_one()?;
    checks.push(("q-limit", (q_limit.extrapolated - TelescopingConstants::Q_LIMIT_AT_1).abs(), 1e-3));

    let mut all = true;
    for (name, value, bound) in checks {
        let pass = value < bound;
        all &= pass;
        let _ = writeln!(
            io.out,
            "{} {name}: {value:.3e} < {bound:e}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(all)
}

fn execute(command: Command, io: &mut Io) -> Outcome {
    match command {
        Command::Build { length, max_n, output } => {
            let figure = spiral_figure(&length, max_n, &figure_settings(LIMIT_TOLERANCE)?)?;
            emit_figure(io, &figure, &output)
        }
        Command::Limit { s, accel, format } => {
            let sum = limit_point(s, &accel.settings()?)?;
            io.note(&format!(
                "W({s}) error estimate {:e} after {} tail terms",
                sum.error_estimate, sum.terms_used
            ));
            io.table(&[TableRow::new("W", s, sum.value)], format)?;
            converged(&sum, "W(s)")
        }
        Command::Classify { length, format } => {
            let c = classify_with(&length, &AccelerationSettings::default());
            let _ = writeln!(io.out, "{}", c.class.name());
            let rows = match c.class {
                ConvergenceClass::Point { value, error_estimate } => {
                    io.note(&format!("error estimate {error_estimate:e}"));
                    vec![TableRow::new("limit", 0.0, value)]
                }
                ConvergenceClass::CircularOrbit { center, radius } => {
                    io.note(&format!("orbit radius {radius}"));
                    vec![TableRow::new("orbit-center", 0.0, center)]
                }
                ConvergenceClass::Divergent { reason } => {
                    io.note(&reason);
                    Vec::new()
                }
            };
            if !rows.is_empty() {
                io.table(&rows, format)?;
            }
            if c.converged {
                Ok(())
            } else {
                Err(Failure::NotConverged(format!("could not evaluate the limit of {length}")))
            }
        }
        Command::Orbit { max_n, tol, output } => {
            let settings = figure_settings(tol)?;
            if output.out.is_none() {
                let orbit = orbit_center(&settings.acceleration)?;
                io.note(&format!(
                    "extrapolated from s = 1e-6, 1e-7, 1e-8; |center - W(1e-8)| = {:.2e}",
                    orbit.surrogate_gap
                ));
                let mut rows: Vec<TableRow> =
                    orbit.samples.iter().map(|(s, w)| TableRow::new("W", *s, w.value)).collect();
                rows.push(TableRow::new("orbit-center", 0.0, orbit.center));
                io.table(&rows, output.format)?;
                return if orbit.converged {
                    Ok(())
                } else {
                    Err(Failure::NotConverged("orbit center did not converge".into()))
                };
            }
            emit_figure(io, &orbit_figure(max_n, &settings)?, &output)
        }
        Command::Curve { s_min, s_max, samples, spirals, output } => {
            let settings = figure_settings(LIMIT_TOLERANCE)?;
            let figure = convergence_figure(s_min, s_max, samples, spirals, 30, &settings)?;
            emit_figure(io, &figure, &output)
        }
        Command::Telescope { check, n_max, q, output } => {
            if check {
                let passed = telescope_check(io, n_max.unwrap_or(2000))?;
                return if passed {
                    Ok(())
                } else {
                    Err(Failure::NotConverged("telescoping checks failed".into()))
                };
            }
            let figure = if q {
                q_figure(1.02, n_max.map_or(35.0, |n| n as f64))?
            } else {
                telescoping_figure(n_max.unwrap_or(12), &figure_settings(LIMIT_TOLERANCE)?)?
            };
            emit_figure(io, &figure, &output)
        }
        Command::Intersect { curve, lo, hi, step, tol, format } => {
            let settings = IntersectSettings { step, tolerance: tol, ..IntersectSettings::default() };
            let f: fn(f64) -> crate::Result<ComplexPoint> = match curve {
                CurveArg::Centers => center_closed,
                CurveArg::Q => q_closed,
            };
            let hits = self_intersections(f, lo, hi, &settings)?;
            let mut rows = Vec::new();
            for hit in &hits {
                io.note(&format!("a = {} b = {} residual {:.1e}", hit.a, hit.b, hit.residual));
                rows.push(TableRow::new("crossing-a", hit.a, hit.point));
                rows.push(TableRow::new("crossing-b", hit.b, f(hit.b)?));
            }
            io.table(&rows, format)
        }
        Command::Interp { length, n, accel, format } => {
            let sum = interpolated_vertex(&length, n, &accel.settings()?)?;
            io.table(&[TableRow::new("interpolant", n, sum.value)], format)?;
            converged(&sum, "the interpolant")
        }
    }
}

/// Runs the command line with explicit output streams; returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut io = Io { out, err };
    match execute(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            io.note(&format!("error: {msg}"));
            EXIT_USAGE
        }
        Err(Failure::NotConverged(msg)) => {
            io.note(&format!("error: {msg}"));
            EXIT_NOT_CONVERGED
        }
    }
}

/// Runs the command line against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("spiral").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["build", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["classify", "--length", "cubic:2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["limit", "--s", "-1"]).0, EXIT_USAGE);
    }

    #[test]
    fn classify_divergent() {
        let (code, out, _) = call(&["classify", "--length", "power:-1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "Divergent");
    }

    #[test]
    fn divergent_interpolant_exits_two() {
        assert_eq!(call(&["interp", "--length", "power:-0.5", "--n", "3.5"]).0, EXIT_NOT_CONVERGED);
    }
}
