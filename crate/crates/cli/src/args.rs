use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Similarity reduction and iterative transformation solver for
/// moving-boundary problems.
#[derive(Debug, Parser)]
#[command(name = "freebound", version, about)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Secant tolerance on both |Gamma| and the boundary increment
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,

    /// Largest iterate index before giving up
    #[arg(long, global = true, default_value_t = 50)]
    pub max_iter: usize,

    /// Include the iteration history
    #[arg(long, global = true)]
    pub trace: bool,

    /// Write to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Add wall time to run reports (makes output run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the one-phase Stefan problem
    Stefan(StefanArgs),
    /// Solve the viscous spreading problem
    Spread(SpreadArgs),
    /// Rerun the reference tables
    Table {
        #[arg(value_enum)]
        which: Which,
    },
    /// Solve, then emit the similarity profile on a uniform grid
    Profile(ProfileArgs),
    /// Solve, then emit the physical profile at time t
    Reconstruct(ReconstructArgs),
    /// Exponent balance residuals of the scaling group
    CheckInvariance(InvarianceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Stefan,
    Spread,
}

#[derive(Debug, Clone, Args)]
pub struct StefanArgs {
    /// Stefan number
    #[arg(long = "S", default_value_t = 1.0, allow_negative_numbers = true)]
    pub s: f64,

    /// Starred free boundary
    #[arg(long = "s-star", default_value_t = 0.5, allow_negative_numbers = true)]
    pub s_star: f64,

    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub step: f64,

    /// First guess for h*; tabulated default when omitted
    #[arg(long, allow_negative_numbers = true)]
    pub h0: Option<f64>,

    /// Second guess for h*; tabulated default when omitted
    #[arg(long, allow_negative_numbers = true)]
    pub h1: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct SpreadArgs {
    /// Front height parameter
    #[arg(long = "H", default_value_t = 0.5, allow_negative_numbers = true)]
    pub h: f64,

    /// Front slope parameter
    #[arg(long = "L", default_value_t = -0.5, allow_negative_numbers = true)]
    pub l: f64,

    #[arg(long = "s-star", default_value_t = 1.0, allow_negative_numbers = true)]
    pub s_star: f64,

    #[arg(long, default_value_t = 5e-4, allow_negative_numbers = true)]
    pub step: f64,

    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub h0: f64,

    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    pub h1: f64,
}

#[derive(Debug, Subcommand)]
pub enum ProblemCmd {
    Stefan(StefanArgs),
    Spread(SpreadArgs),
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Number of integration steps on [0, eta_w]
    #[arg(long, global = true, default_value_t = 100)]
    pub points: usize,

    #[command(subcommand)]
    pub problem: ProblemCmd,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Physical time
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub t: f64,

    #[arg(long, global = true, default_value_t = 100)]
    pub points: usize,

    #[command(subcommand)]
    pub problem: ProblemCmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Stefan,
    Spread,
}

/// Either a preset or explicit exponents. `--beta` selects a Neumann origin.
#[derive(Debug, Args)]
pub struct InvarianceArgs {
    #[arg(value_enum)]
    pub preset: Option<Preset>,

    #[arg(long, allow_negative_numbers = true, conflicts_with = "preset", required_unless_present = "preset")]
    pub n: Option<f64>,

    #[arg(long, allow_negative_numbers = true, conflicts_with = "preset", required_unless_present = "preset")]
    pub alpha: Option<f64>,

    #[arg(long, allow_negative_numbers = true, conflicts_with = "preset")]
    pub beta: Option<f64>,

    /// Origin coefficient (A or B)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub coef: f64,

    /// Override the derived gamma = 2/(n alpha + 1)
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: Option<f64>,
}
