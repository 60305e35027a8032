//! Command-line front end: every library operation as a subcommand with
//! deterministic, machine-readable output.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage error. Every run
//! writes a provenance header (version, argument list, seed where one is
//! used); CSV output carries it as leading `#` comments, JSON as a "meta"
//! object. `--out -` streams to stdout, any other path is written
//! atomically.

mod args;
mod cmd_counts;
mod cmd_scaling;
mod cmd_selftest;
mod cmd_spectra;
mod emit;
mod profile_spec;

use clap::{Parser, Subcommand};

pub type CmdResult = Result<(), String>;

/// Default RNG seed, overridable through the environment.
pub fn default_seed() -> u64 {
    std::env::var("SUPERTREE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1805)
}

#[derive(Parser)]
#[command(
    name = "supertree",
    version,
    about = "Path counts, spectra, and scaling laws of trees with level-dependent branching"
)]
struct Cli {
    /// Output path; "-" streams to stdout, files are replaced atomically
    #[arg(long, global = true, default_value = "-")]
    out: String,
    /// csv or json; each subcommand picks its natural default
    #[arg(long, global = true, value_enum)]
    format: Option<args::Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue density of a branching profile against the semicircle
    Spectrum(cmd_spectra::SpectrumArgs),
    /// Coefficients of the monic Hermite polynomial
    Hermite(cmd_spectra::HermiteArgs),
    /// Exact path counts by step and level, with a summary
    Paths(cmd_counts::PathsArgs),
    /// Counting series as exact rational functions
    Genfunc(cmd_counts::GenfuncArgs),
    /// Area polynomial of height-confined Dyck paths
    Dyck(cmd_counts::DyckArgs),
    /// Carlitz-Riordan q-Catalan polynomial
    Qcatalan(cmd_counts::QcatalanArgs),
    /// Double-scaling collapse curves of the area-weighted walk
    Collapse(cmd_scaling::CollapseArgs),
    /// Pooled random tridiagonal spectra against the semicircle
    Rmt(cmd_spectra::RmtArgs),
    /// Edge, entropy, and watermelon scaling fits
    Kpz(cmd_scaling::KpzArgs),
    /// Lifshitz tail of the return probability
    Lifshitz(cmd_scaling::LifshitzArgs),
    /// Oracle and identity suite at desk scale
    Selftest(cmd_selftest::SelftestArgs),
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let out = cli.out.as_str();
    let format = cli.format;
    let result = match &cli.command {
        Command::Spectrum(a) => cmd_spectra::run_spectrum(a, out, format),
        Command::Hermite(a) => cmd_spectra::run_hermite(a, out, format),
        Command::Paths(a) => cmd_counts::run_paths(a, out, format),
        Command::Genfunc(a) => cmd_counts::run_genfunc(a, out, format),
        Command::Dyck(a) => cmd_counts::run_dyck(a, out, format),
        Command::Qcatalan(a) => cmd_counts::run_qcatalan(a, out, format),
        Command::Collapse(a) => cmd_scaling::run_collapse(a, out, format),
        Command::Rmt(a) => cmd_spectra::run_rmt(a, out, format),
        Command::Kpz(a) => cmd_scaling::run_kpz(a, out, format),
        Command::Lifshitz(a) => cmd_scaling::run_lifshitz(a, out, format),
        Command::Selftest(a) => cmd_selftest::run_selftest(a, out),
    };
    match result {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            std::process::ExitCode::from(1)
        }
    }
}
