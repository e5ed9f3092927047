//! `fusedrot`: conversions between rotation representations and the
//! fused-angle experiments, as text, CSV or JSON.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "fusedrot",
    version,
    about = "Fused angles, tilt angles and friends"
)]
struct Cli {
    /// Read angle inputs in degrees. Outputs stay in radians.
    #[arg(long, global = true)]
    degrees: bool,

    /// Output format. `convert` prints a bare value line when omitted,
    /// the experiments default to CSV.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of stdout. Relative paths are resolved
    /// against FUSEDROT_OUTPUT_DIR when it is set.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Convert one rotation to another representation.
    Convert(ConvertArgs),
    /// Sweep pure tilt rotations over a disc of tilt axes and angles.
    TiltSweep(TiltSweepArgs),
    /// Conjugate a rotation by yaw and record how each representation moves.
    Axisym(AxisymArgs),
    /// Level sets of constant tilt angle in sine coordinates.
    Levels(LevelsArgs),
    /// Finite-difference slopes of Euler and fused angles near gimbal lock.
    Probe(ProbeArgs),
}

#[derive(Debug, Args)]
struct ConvertArgs {
    /// Source representation: quat, rotmat, euler-zyx, euler-zxy, tilt, fused.
    #[arg(long)]
    from: fusedrot::Kind,
    /// Target representation.
    #[arg(long)]
    to: fusedrot::Kind,
    /// Parameters of the source rotation, in the order of its components.
    #[arg(required = true, allow_negative_numbers = true)]
    values: Vec<f64>,
}

#[derive(Debug, Args)]
struct TiltSweepArgs {
    #[arg(long, default_value_t = fusedrot_lab::DEFAULT_ALPHA_MAX)]
    alpha_max: f64,
    #[arg(long, default_value_t = fusedrot_lab::DEFAULT_N_RADIAL)]
    n_radial: usize,
    #[arg(long, default_value_t = fusedrot_lab::DEFAULT_N_ANGULAR)]
    n_angular: usize,
}

#[derive(Debug, Args)]
struct AxisymArgs {
    /// Base rotation kind, or `random` to draw one from `--seed`.
    #[arg(long)]
    from: String,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = fusedrot_lab::DEFAULT_N_BETA)]
    n_beta: usize,
    #[arg(allow_negative_numbers = true)]
    values: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Repr {
    Fused,
    Euler,
}

#[derive(Debug, Args)]
struct LevelsArgs {
    #[arg(long, value_enum, default_value = "fused")]
    repr: Repr,
    /// Tilt angles in (0, π/2], comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_value = "0.2617993877991494,0.5235987755982988,0.7853981633974483,1.0471975511965976,1.3089969389957472"
    )]
    alphas: Vec<f64>,
    #[arg(long, default_value_t = 360)]
    n_gamma: usize,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    /// Tilt angles to probe, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        conflicts_with = "margins"
    )]
    alpha: Vec<f64>,
    /// Distances of the Euler pitch from π/2; each gives tilt angle π/2 - m.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    margins: Vec<f64>,
    /// Tilt axis at the centre of the probe.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2, allow_negative_numbers = true)]
    gamma: f64,
    /// Half-width of the central difference. Defaults to 0.01 for `--alpha`
    /// and a tenth of the margin for `--margins`.
    #[arg(long)]
    delta: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Singular(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Singular(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<fusedrot::RotError> for CliError {
    fn from(e: fusedrot::RotError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<fusedrot_lab::LabError> for CliError {
    fn from(e: fusedrot_lab::LabError) -> Self {
        match e {
            fusedrot_lab::LabError::Singular(_) => CliError::Singular(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<fusedrot_oracle::OracleError> for CliError {
    fn from(e: fusedrot_oracle::OracleError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// What a successful run produced: the bytes to write and any singularity
/// met on the way, which is reported but does not suppress the output.
pub struct Outcome {
    bytes: Vec<u8>,
    singularity: Option<fusedrot::Singularity>,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let ctx = commands::Context {
        degrees: cli.degrees,
        format: cli.format,
    };
    match cli.command {
        Command::Convert(a) => commands::convert(&ctx, a.from, a.to, &a.values),
        Command::TiltSweep(a) => commands::tilt_sweep(&ctx, a.alpha_max, a.n_radial, a.n_angular),
        Command::Axisym(a) => commands::axisym(&ctx, &a.from, a.seed, &a.values, a.n_beta),
        Command::Levels(a) => {
            let kind = match a.repr {
                Repr::Fused => fusedrot_lab::LevelSetKind::Fused,
                Repr::Euler => fusedrot_lab::LevelSetKind::Euler,
            };
            commands::levels(&ctx, kind, &a.alphas, a.n_gamma)
        }
        Command::Probe(a) => commands::probe(&ctx, &a.alpha, &a.margins, a.gamma, a.delta),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let outcome = run(cli).and_then(|o| output::emit(&o.bytes, output.as_deref()).map(|_| o));
    match outcome {
        Ok(Outcome {
            singularity: Some(s),
            ..
        }) => {
            eprintln!("warning: {s}");
            ExitCode::from(3)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
