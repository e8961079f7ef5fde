//! Command-line surface: argument definitions, validation and dispatch.
//!
//! Exit codes: 0 on success, 2 for anything wrong with the invocation
//! (unknown flags, bad values, invalid flag combinations), 3 for I/O
//! failures while writing output.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use polynoise::{emit_shader_source, emit_shader_source_bare, FbmError, FbmParams};

use crate::bench;
use crate::render::{self, PlaneView, SphereView};
use crate::stats;
use crate::variant::{parse_kind, Sampler, SamplerError};

/// Procedural gradient noise from pure arithmetic: renders, benchmarks,
/// statistics and GLSL export for nine noise variants.
#[derive(Parser)]
#[command(name = "polynoise", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a planar slice of the noise field to a grayscale image.
    Render(RenderArgs),
    /// Render the noise field on a sphere surface (3-D/4-D variants only).
    Sphere(SphereArgs),
    /// Measure evaluation throughput and report JSON.
    Bench(BenchArgs),
    /// Sample random points and report distribution statistics as JSON.
    Stats(StatsArgs),
    /// Print the self-contained GLSL source for a variant.
    ExportGlsl(ExportArgs),
}

/// Flags shared by every command that evaluates noise.
#[derive(Args)]
struct NoiseArgs {
    /// Noise variant: simplex2..4, classic2..4 or periodic2..4.
    #[arg(long, default_value = "simplex2")]
    noise: String,

    /// Tiling period per axis for periodic variants, e.g. `--period 7,5,3`.
    /// Whole numbers in 1..=288, one per dimension.
    #[arg(long, value_delimiter = ',')]
    period: Option<Vec<u32>>,

    /// Octaves of the fractal sum; 1 evaluates the plain variant.
    #[arg(long, default_value_t = 1)]
    octaves: u32,

    /// Frequency multiplier between octaves.
    #[arg(long, default_value_t = 2.0)]
    lacunarity: f32,

    /// Amplitude multiplier between octaves.
    #[arg(long, default_value_t = 0.5)]
    gain: f32,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    noise: NoiseArgs,

    /// Image size as WIDTHxHEIGHT.
    #[arg(long, default_value = "256x256", value_parser = parse_size)]
    size: (u32, u32),

    /// Noise-space step between adjacent pixels.
    #[arg(long, default_value_t = 0.05)]
    scale: f32,

    /// Noise-space coordinates of pixel (0, 0): x,y or x,y,z or x,y,z,w.
    #[arg(long, value_delimiter = ',')]
    origin: Option<Vec<f32>>,

    /// Fixed z (and w) coordinates of the rendered slice, added to the
    /// origin: z or z,w.
    #[arg(long, value_delimiter = ',')]
    slice: Option<Vec<f32>>,

    /// Number of worker threads. The image is identical for any value.
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Image format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Pgm)]
    format: OutputFormat,

    /// Output file path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SphereArgs {
    #[command(flatten)]
    noise: NoiseArgs,

    /// Image size as WIDTHxHEIGHT.
    #[arg(long, default_value = "256x256", value_parser = parse_size)]
    size: (u32, u32),

    /// Sphere radius in noise units.
    #[arg(long, default_value_t = 4.0)]
    scale: f32,

    /// Noise-space center of the sphere: x,y,z or x,y,z,w (w is the fixed
    /// fourth coordinate for 4-D variants).
    #[arg(long, value_delimiter = ',')]
    origin: Option<Vec<f32>>,

    /// Number of worker threads. The image is identical for any value.
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Image format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Pgm)]
    format: OutputFormat,

    /// Output file path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    noise: NoiseArgs,

    /// Seed for the sample-point stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Target wall-clock duration in seconds (10% warmup, 90% measured).
    #[arg(long, default_value_t = 1.0)]
    duration: f64,

    /// Number of worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    noise: NoiseArgs,

    /// Number of random sample points.
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,

    /// Seed for the sample-point stream.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Sampling cube per-axis bounds as LO,HI.
    #[arg(long, value_delimiter = ',', default_values_t = [-64.0f32, 64.0f32])]
    domain: Vec<f32>,

    /// Number of worker threads.
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Noise variant: simplex2..4, classic2..4 or periodic2..4.
    #[arg(long, default_value = "simplex2")]
    noise: String,

    /// Drop the `#version` line, for pasting into a larger shader.
    #[arg(long)]
    bare: bool,

    /// Write the source here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Pgm,
    Png,
}

/// A failure after successful flag parsing.
#[derive(Debug)]
pub enum CliError {
    /// The invocation doesn't make sense; exits with code 2.
    Usage(String),
    /// Output could not be written; exits with code 3.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<SamplerError> for CliError {
    fn from(e: SamplerError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<FbmError> for CliError {
    fn from(e: FbmError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn io_err(path: &Path, e: impl fmt::Display) -> CliError {
    CliError::Io(format!("cannot write {}: {e}", path.display()))
}

fn parse_size(s: &str) -> Result<(u32, u32), String> {
    let (w, h) = s
        .split_once('x')
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got `{s}`"))?;
    let w: u32 = w.trim().parse().map_err(|_| format!("bad width `{w}`"))?;
    let h: u32 = h.trim().parse().map_err(|_| format!("bad height `{h}`"))?;
    if w == 0 || h == 0 {
        return Err("image dimensions must be nonzero".to_owned());
    }
    Ok((w, h))
}

impl NoiseArgs {
    fn sampler(&self) -> Result<Sampler, CliError> {
        let kind = parse_kind(&self.noise)?;
        let fbm = FbmParams::new(self.octaves, self.lacunarity, self.gain)?;
        Ok(Sampler::new(kind, self.period.as_deref(), fbm)?)
    }
}

/// Validates an `--origin` list: 2 to 4 finite components, padded with zeros.
fn parse_origin(origin: &Option<Vec<f32>>, min: usize) -> Result<[f32; 4], CliError> {
    let mut out = [0.0f32; 4];
    let Some(values) = origin else {
        return Ok(out);
    };
    if values.len() < min || values.len() > 4 {
        return Err(CliError::Usage(format!(
            "--origin takes {min} to 4 components, got {}",
            values.len()
        )));
    }
    for (slot, &v) in out.iter_mut().zip(values) {
        if !v.is_finite() {
            return Err(CliError::Usage(format!(
                "--origin component {v} is not finite"
            )));
        }
        *slot = v;
    }
    Ok(out)
}

/// Validates a `--slice` list (1 or 2 finite components) and adds it to the
/// z/w slots of `origin`.
fn apply_slice(origin: &mut [f32; 4], slice: &Option<Vec<f32>>) -> Result<(), CliError> {
    let Some(values) = slice else {
        return Ok(());
    };
    if values.is_empty() || values.len() > 2 {
        return Err(CliError::Usage(format!(
            "--slice takes 1 or 2 components, got {}",
            values.len()
        )));
    }
    for (slot, &v) in origin[2..].iter_mut().zip(values) {
        if !v.is_finite() {
            return Err(CliError::Usage(format!(
                "--slice component {v} is not finite"
            )));
        }
        *slot += v;
    }
    Ok(())
}

fn check_scale(scale: f32) -> Result<(), CliError> {
    if !scale.is_finite() {
        return Err(CliError::Usage(format!("--scale {scale} is not finite")));
    }
    Ok(())
}

fn write_image(
    path: &Path,
    format: OutputFormat,
    width: u32,
    height: u32,
    pixels: &[u8],
) -> Result<(), CliError> {
    match format {
        OutputFormat::Pgm => {
            render::write_pgm(path, width, height, pixels).map_err(|e| io_err(path, e))
        }
        #[cfg(feature = "png")]
        OutputFormat::Png => {
            render::write_png(path, width, height, pixels).map_err(|e| io_err(path, e))
        }
        #[cfg(not(feature = "png"))]
        OutputFormat::Png => Err(CliError::Usage(
            "this binary was built without the `png` feature; use --format pgm".to_owned(),
        )),
    }
}

/// Prints `text` to stdout or writes it to `out` if given.
fn write_text(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| io_err(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_json<T: serde::Serialize>(out: &Option<PathBuf>, report: &T) -> Result<(), CliError> {
    let mut json = serde_json::to_string_pretty(report).expect("report serialization");
    json.push('\n');
    write_text(out, &json)
}

/// Runs a parsed invocation.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Render(args) => {
            let sampler = args.noise.sampler()?;
            check_scale(args.scale)?;
            let mut origin = parse_origin(&args.origin, 2)?;
            apply_slice(&mut origin, &args.slice)?;
            let (width, height) = args.size;
            let view = PlaneView {
                width,
                height,
                origin,
                scale: args.scale,
            };
            let pixels = render::render_plane(&sampler, &view, args.threads);
            write_image(&args.out, args.format, width, height, &pixels)
        }
        Command::Sphere(args) => {
            let sampler = args.noise.sampler()?;
            if sampler.dims() < 3 {
                return Err(CliError::Usage(format!(
                    "sphere rendering needs a 3-D or 4-D variant; {} is 2-D",
                    sampler.kind()
                )));
            }
            check_scale(args.scale)?;
            let origin = parse_origin(&args.origin, 3)?;
            let (width, height) = args.size;
            let view = SphereView {
                width,
                height,
                origin,
                radius: args.scale,
            };
            let pixels = render::render_sphere(&sampler, &view, args.threads);
            write_image(&args.out, args.format, width, height, &pixels)
        }
        Command::Bench(args) => {
            let sampler = args.noise.sampler()?;
            if !(args.duration.is_finite() && args.duration >= 0.0) {
                return Err(CliError::Usage(format!(
                    "--duration {} is not a non-negative number of seconds",
                    args.duration
                )));
            }
            let report = bench::run_bench(&sampler, args.seed, args.duration, args.threads);
            report_json(&args.out, &report)
        }
        Command::Stats(args) => {
            let sampler = args.noise.sampler()?;
            if args.samples == 0 {
                return Err(CliError::Usage("--samples must be at least 1".to_owned()));
            }
            if args.domain.len() != 2 {
                return Err(CliError::Usage(format!(
                    "--domain takes exactly LO,HI, got {} components",
                    args.domain.len()
                )));
            }
            let (lo, hi) = (args.domain[0], args.domain[1]);
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(CliError::Usage(format!(
                    "--domain needs finite LO < HI, got {lo},{hi}"
                )));
            }
            let report =
                stats::run_stats(&sampler, args.samples, args.seed, (lo, hi), args.threads);
            report_json(&args.out, &report)
        }
        Command::ExportGlsl(args) => {
            let kind = parse_kind(&args.noise)?;
            if args.bare {
                write_text(&args.out, &emit_shader_source_bare(kind))
            } else {
                write_text(&args.out, emit_shader_source(kind))
            }
        }
    }
}
