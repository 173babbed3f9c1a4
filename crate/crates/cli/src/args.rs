// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::builder::TypedValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_NMAX: usize = 32;

#[derive(Debug, Parser)]
#[command(name = "lgkit", version, about = "Laguerre-Gaussian modes in two-mode Fock space")]
pub struct Cli {
    /// Fock-space cutoff (largest total excitation).
    #[arg(long, global = true, env = "LGKIT_NMAX", default_value_t = DEFAULT_NMAX,
          value_parser = clap::value_parser!(u16).range(1..=64).map(usize::from))]
    pub nmax: usize,

    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Self-check tolerance for quadrature node doubling.
    #[arg(long, global = true, value_parser = positive_finite)]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate ⟨η|n,l⟩ or ⟨τ|n,l⟩ on a square grid.
    Mode(ModeArgs),
    /// Two-dimensional slice of the Wigner function of |n,l⟩.
    Wigner(WignerArgs),
    /// σ-plane marginal distribution of |n,l⟩.
    Marginal(MarginalArgs),
    /// FrFT eigenrelation of ⟨τ|n,l⟩ at one order.
    Frft(FrftArgs),
    /// GWT of Hermite-Gaussian modes against the LG overlap.
    Gwt(GwtArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ModeSelect {
    /// Total photon number.
    #[arg(long)]
    pub n: u32,
    /// Angular momentum quantum number.
    #[arg(long, allow_negative_numbers = true)]
    pub l: i32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    /// Half-width of the square grid.
    #[arg(long, default_value_t = 3.0, value_parser = positive_finite)]
    pub extent: f64,
    /// Nodes per axis.
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(8..=2048))]
    pub res: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Plane {
    Eta,
    Tau,
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    #[command(flatten)]
    pub mode: ModeSelect,
    #[arg(long, value_enum, default_value_t = Plane::Eta)]
    pub plane: Plane,
    #[command(flatten)]
    pub grid: GridArgs,
}

/// The two phase-space axes swept by a Wigner slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axes {
    X1p1,
    X2p2,
    X1x2,
    P1p2,
    X1p2,
    P1x2,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    #[command(flatten)]
    pub mode: ModeSelect,
    #[arg(long, value_enum, default_value_t = Axes::X1p1)]
    pub axes: Axes,
    /// Fixed coordinates; the two swept axes ignore theirs.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p1: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x2: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p2: f64,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Add the displaced-parity oracle and its deviation.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct MarginalArgs {
    #[command(flatten)]
    pub mode: ModeSelect,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Add |⟨τ=σ|n,l⟩|²/π, the γ-plane quadrature and the largest deviation.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct FrftArgs {
    #[command(flatten)]
    pub mode: ModeSelect,
    /// Fractional order in radians.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct GwtArgs {
    /// Hermite-Gaussian index of the bra mode.
    #[arg(long)]
    pub m: u32,
    /// Hermite-Gaussian index of the ket mode.
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Fock,
    Wigner,
    Transforms,
    Modes,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Fock => "fock",
            Suite::Wigner => "wigner",
            Suite::Transforms => "transforms",
            Suite::Modes => "modes",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Report destination; falls back to `--out`, then stdout.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

fn positive_finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a positive finite number, got {s}"))
    }
}
