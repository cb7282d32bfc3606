//! Command-line flags.

use crate::Command;
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "kratzer", version, about = "Bound states of the 2D non-central Kratzer potential")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Closed-form non-relativistic energies over a parameter grid.
    Spectrum(Flags),
    /// Critical angular dipole moments over (m, D_r).
    Critical(Flags),
    /// Samples of the normalized wavefunction ψ(r, θ).
    Wavefunction(Flags),
    /// Spin or pseudo-spin symmetric relativistic energies.
    Relativistic(Flags),
    /// Critical moments pivoted as D_r rows by m columns.
    Table1(Flags),
    /// Curve data for figure N (1..9).
    ///
    /// 1: E(1,0) vs D_θ, D_r = 0.3, 0.6, 0.9.
    /// 2: E(n,0), n = 1..5, D_r = 0.5.
    /// 3: E(n,1), n = 1..3, D_r = 0.5, both branches.
    /// 4: E(3,m), m = 0..3, D_r = 0.5, both branches.
    /// 5: boundary D_r of the forbidden region vs D_θ, m = 0..2.
    /// 6: E(2,1) over D_r in [0, 1] and D_θ in [0, 8].
    /// 7: spin-symmetric E(n,1), n = 1..3, D_r = 0.3.
    /// 8: spin-symmetric E(2,1), D_r = 0, 0.3, 0.6.
    /// 9: spin-symmetric root and α² expansion, E(n,1), n = 1..3, D_r = 0.3.
    /// D_θ axes run from 0 to just past the largest critical value.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=9))]
        number: u8,
        #[command(flatten)]
        flags: Flags,
    },
}

impl Sub {
    pub fn split(self) -> (Command, Flags) {
        match self {
            Sub::Spectrum(f) => (Command::Spectrum, f),
            Sub::Critical(f) => (Command::Critical, f),
            Sub::Wavefunction(f) => (Command::Wavefunction, f),
            Sub::Relativistic(f) => (Command::Relativistic, f),
            Sub::Table1(f) => (Command::Table1, f),
            Sub::Figure { number, flags } => (Command::Figure(number), flags),
        }
    }
}

/// Grids are `start:stop:step`, a single value, or a comma list of either.
#[derive(Debug, Default, Args)]
pub struct Flags {
    /// Principal quantum number grid.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<String>,
    /// Angular quantum number grid.
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<String>,
    /// cosine, sine or both.
    #[arg(long)]
    pub branch: Option<String>,
    /// Radial dipole moment grid.
    #[arg(long = "Dr", allow_hyphen_values = true)]
    pub d_r: Option<String>,
    /// Angular dipole moment grid (non-negative).
    #[arg(long = "Dtheta", allow_hyphen_values = true)]
    pub d_theta: Option<String>,
    /// Coulomb charge.
    #[arg(long = "Z")]
    pub z: Option<String>,
    /// Fine-structure constant.
    #[arg(long)]
    pub alpha: Option<String>,
    /// spin or pseudospin.
    #[arg(long)]
    pub mode: Option<String>,
    /// csv or json.
    #[arg(long)]
    pub format: Option<String>,
    /// Output file; standard output if absent.
    #[arg(long)]
    pub out: Option<String>,
    /// Mathieu truncation tolerance.
    #[arg(long)]
    pub tol: Option<String>,
    /// spin-limit or schrodinger bound-state condition for critical moments.
    #[arg(long)]
    pub coupling: Option<String>,
    /// Radius grid for wavefunction samples.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Angle grid (radians) for wavefunction samples.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Option<String>,
    /// Flat key = value file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl Flags {
    pub fn overrides(&self) -> BTreeMap<String, String> {
        [
            ("n", &self.n),
            ("m", &self.m),
            ("branch", &self.branch),
            ("Dr", &self.d_r),
            ("Dtheta", &self.d_theta),
            ("Z", &self.z),
            ("alpha", &self.alpha),
            ("mode", &self.mode),
            ("format", &self.format),
            ("out", &self.out),
            ("tol", &self.tol),
            ("coupling", &self.coupling),
            ("r", &self.r),
            ("theta", &self.theta),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
        .collect()
    }
}
