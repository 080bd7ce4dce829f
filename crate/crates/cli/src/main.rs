//! `fgap`: classify matrices and verify displacement bounds on preset groups.
//!
//! Exit status is 0 when every check passes, 1 when a bound fails and 2 on
//! usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fgap_core::report::{
    self, classify_matrix, gap_report, systole_report, verify_point_set, verify_with_points,
    OutputFormat, PointSetInput, RunConfig, Tolerances,
};
use fgap_core::svg::render_svg;
use fgap_core::GeometryError;

#[derive(Parser)]
#[command(
    name = "fgap",
    version,
    about = "Elliptic fixed-point gaps in Fuchsian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the isometry with matrix [[a, b], [c, d]].
    Classify {
        #[arg(allow_negative_numbers = true)]
        a: f64,
        #[arg(allow_negative_numbers = true)]
        b: f64,
        #[arg(allow_negative_numbers = true)]
        c: f64,
        #[arg(allow_negative_numbers = true)]
        d: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every applicable bound check on a preset group.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        /// Write a disk-model picture of the elliptic points.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Minimal distance between distinct elliptic fixed points.
    Gap {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Shortest translation length among enumerated hyperbolic elements.
    Systole {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Gap checks on an elliptic point set read from a JSON file.
    CheckPoints {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long = "tol", value_name = "NAME=VALUE", value_parser = parse_tol)]
        tol: Vec<(String, f64)>,
    },
}

/// Presets: modular, hecke:Q, triangle:P,Q,R.
#[derive(Args)]
struct RunArgs {
    preset: String,
    /// Maximum word length.
    #[arg(long, default_value_t = 10)]
    depth: usize,
    /// Radius of the ball about i.
    #[arg(long, default_value_t = 3.0)]
    radius: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override a tolerance (report, point_dedup, matrix_dedup).
    #[arg(long = "tol", value_name = "NAME=VALUE", value_parser = parse_tol)]
    tol: Vec<(String, f64)>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let v: f64 = v.parse().map_err(|e| format!("{v:?}: {e}"))?;
    Ok((k.to_string(), v))
}

impl RunArgs {
    fn config(&self, svg: Option<PathBuf>) -> RunConfig {
        RunConfig {
            preset: self.preset.clone(),
            max_word_length: self.depth,
            ball_radius: self.radius,
            output_format: self.format.into(),
            svg_path: svg,
            tolerance_overrides: self.tol.iter().cloned().collect(),
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), GeometryError> {
    fs::write(path, contents).map_err(|e| GeometryError::Io(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<i32, GeometryError> {
    match cli.command {
        Command::Classify { a, b, c, d, format } => {
            let record = classify_matrix(a, b, c, d)?;
            print!("{}", report::render(&record, format.into())?);
            Ok(0)
        }
        Command::Verify { run, svg } => {
            let cfg = run.config(svg);
            let (rep, eps) = verify_with_points(&cfg)?;
            if let Some(path) = &cfg.svg_path {
                write_file(path, &render_svg(&rep.preset, &eps, rep.gap.as_ref()))?;
            }
            print!("{}", rep.render(cfg.output_format)?);
            Ok(rep.exit_code())
        }
        Command::Gap { run, svg } => {
            let cfg = run.config(svg);
            let (rep, eps) = gap_report(&cfg)?;
            if let Some(path) = &cfg.svg_path {
                write_file(path, &render_svg(&rep.preset, &eps, Some(&rep.gap)))?;
            }
            print!("{}", report::render(&rep, cfg.output_format)?);
            Ok(0)
        }
        Command::Systole { run } => {
            let cfg = run.config(None);
            let rep = systole_report(&cfg)?;
            print!("{}", report::render(&rep, cfg.output_format)?);
            Ok(0)
        }
        Command::CheckPoints { file, format, tol } => {
            let text = fs::read_to_string(&file)
                .map_err(|e| GeometryError::Io(format!("{}: {e}", file.display())))?;
            let input = PointSetInput::from_json(&text)?;
            let mut t = Tolerances::default();
            for (k, v) in &tol {
                t.apply_override(k, *v)?;
            }
            let rep = verify_point_set(&input, &t)?;
            print!("{}", rep.render(format.into())?);
            Ok(rep.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
