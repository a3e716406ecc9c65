use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use su3squeeze::{Spinor, C64};

/// Tolerance on |‖ζ‖ - 1| below which a spinor is silently rescaled.
pub const AUTO_NORMALIZE_TOL: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(
    name = "su3squeeze",
    version,
    about = "su(3) subalgebra classification and spin-1 one-axis-twisting squeezing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure-constant checks, roots, canonical triads and the raising-operator search.
    AlgebraReport(ReportArgs),
    /// One twisting run: optimal squeezing time, variance and quadrature.
    Squeeze(SqueezeArgs),
    /// Runs over several particle numbers and fits the log-log slope.
    Sweep(SweepArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SqueezeArgs {
    /// Particle number.
    #[arg(long)]
    pub n: usize,
    /// Spinor (ζ₁, ζ₀, ζ₋₁) as `re[:im],re[:im],re[:im]`.
    #[arg(long, value_parser = parse_spinor_components)]
    pub spinor: SpinorInput,
    /// Squeezing type, 1 or 2.
    #[arg(long = "type", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub squeeze_type: u8,
    /// Lower end of the χt window (default scales as N^(-2/3)).
    #[arg(long)]
    pub chi_t_min: Option<f64>,
    /// Upper end of the χt window (default scales as N^(-2/3)).
    #[arg(long)]
    pub chi_t_max: Option<f64>,
    /// Number of log-spaced χt points.
    #[arg(long, default_value_t = su3squeeze::squeezing::DEFAULT_POINTS)]
    pub points: usize,
    /// Seed for the multi-start angle solver.
    #[arg(long, default_value_t = su3squeeze::dynamics::DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Comma-separated ascending particle numbers.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long, value_parser = parse_spinor_components, default_value = "0,1,0")]
    pub spinor: SpinorInput,
    #[arg(long = "type", default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub squeeze_type: u8,
    #[arg(long, default_value_t = su3squeeze::dynamics::DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

/// Raw spinor components as typed on the command line.
#[derive(Clone, Copy, Debug)]
pub struct SpinorInput(pub [C64; 3]);

fn parse_component(s: &str) -> Result<C64, String> {
    let mut parts = s.trim().splitn(2, ':');
    let re = parts.next().unwrap_or("");
    let re: f64 = re.parse().map_err(|_| format!("bad real part {re:?}"))?;
    let im: f64 = match parts.next() {
        Some(im) => im
            .parse()
            .map_err(|_| format!("bad imaginary part {im:?}"))?,
        None => 0.0,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("non-finite component {s:?}"));
    }
    Ok(C64::new(re, im))
}

pub fn parse_spinor_components(s: &str) -> Result<SpinorInput, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected 3 components, got {}", parts.len()));
    }
    Ok(SpinorInput([
        parse_component(parts[0])?,
        parse_component(parts[1])?,
        parse_component(parts[2])?,
    ]))
}

/// Accepts spinors within 1e-6 of unit norm (rescaling them, with a warning)
/// and rejects everything else.
pub fn validate_spinor(input: SpinorInput) -> Result<(Spinor, Option<String>), String> {
    let norm = input.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let off = (norm - 1.0).abs();
    if off >= AUTO_NORMALIZE_TOL {
        return Err(format!(
            "spinor norm {norm} is off by {off:e}; only deviations below {AUTO_NORMALIZE_TOL:e} are auto-normalized"
        ));
    }
    let spinor = Spinor::normalize(input.0).map_err(|e| e.to_string())?;
    let warning = (off > 0.0).then(|| format!("warning: spinor rescaled from norm {norm}"));
    Ok((spinor, warning))
}
