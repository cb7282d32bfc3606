//! Command-line front end for the `kratzer` library.
//!
//! Every command reads a flat key/value configuration (from a file, flags,
//! or both, flags winning), evaluates its parameter grid in parallel and
//! writes one CSV or JSON table.

pub mod args;
pub mod commands;
pub mod config;
pub mod grid;
pub mod output;

use kratzer::rel::FINE_STRUCTURE;
use kratzer::{Branch, SymmetryMode};
use output::Format;
use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Solver(_) | CliError::Io(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Critical,
    Wavefunction,
    Relativistic,
    Table1,
    Figure(u8),
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Spectrum => f.write_str("spectrum"),
            Command::Critical => f.write_str("critical"),
            Command::Wavefunction => f.write_str("wavefunction"),
            Command::Relativistic => f.write_str("relativistic"),
            Command::Table1 => f.write_str("table1"),
            Command::Figure(n) => write!(f, "figure {n}"),
        }
    }
}

/// Which bound-state condition defines a critical moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coupling {
    /// `c_2m(4D_θ) + 8D_r = 0`.
    Schrodinger,
    /// `c_2m(8D_θ) + 16D_r = 0`, the weak-coupling limit of spin symmetry.
    SpinLimit,
}

impl FromStr for Coupling {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "schrodinger" | "schroedinger" | "nonrel" => Ok(Coupling::Schrodinger),
            "spin-limit" | "spinlimit" | "spin_limit" => Ok(Coupling::SpinLimit),
            other => Err(format!("unknown coupling '{other}' (expected spin-limit or schrodinger)")),
        }
    }
}

impl fmt::Display for Coupling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coupling::Schrodinger => "schrodinger",
            Coupling::SpinLimit => "spin-limit",
        })
    }
}

/// Fully resolved settings for one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n: Vec<u32>,
    pub m: Vec<u32>,
    pub branches: Vec<Branch>,
    pub d_r: Vec<f64>,
    pub d_theta: Vec<f64>,
    pub z: f64,
    pub alpha: f64,
    pub mode: SymmetryMode,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// Mathieu truncation tolerance.
    pub tol: f64,
    pub coupling: Coupling,
    pub r: Vec<f64>,
    pub theta: Vec<f64>,
}

const COMMON_KEYS: [&str; 4] = ["Z", "format", "out", "tol"];

/// Defaults and accepted keys per command, beyond the common
/// `Z`, `format`, `out` and `tol`.
fn defaults(command: Command) -> (&'static [(&'static str, &'static str)], &'static [&'static str]) {
    match command {
        Command::Spectrum => (
            &[("n", "1"), ("m", "0"), ("branch", "cosine"), ("Dr", "0"), ("Dtheta", "0")],
            &["n", "m", "branch", "Dr", "Dtheta"],
        ),
        Command::Critical | Command::Table1 => (
            &[("m", "0:3:1"), ("branch", "cosine"), ("Dr", "-0.3:0.9:0.3"), ("coupling", "spin-limit")],
            &["m", "branch", "Dr", "coupling"],
        ),
        Command::Wavefunction => (
            &[
                ("n", "2"),
                ("m", "1"),
                ("branch", "cosine"),
                ("Dr", "0.3"),
                ("Dtheta", "0.5"),
                ("r", "0:20:0.25"),
                ("theta", "0:6.28318530718:0.314159265359"),
            ],
            &["n", "m", "branch", "Dr", "Dtheta", "r", "theta"],
        ),
        Command::Relativistic => (
            &[("n", "1:3:1"), ("m", "1"), ("branch", "cosine"), ("Dr", "0.3"), ("Dtheta", "0:2.5:0.5"), ("mode", "spin")],
            &["n", "m", "branch", "Dr", "Dtheta", "alpha", "mode"],
        ),
        Command::Figure(5) => (&[("coupling", "schrodinger")], &["coupling"]),
        Command::Figure(7..=9) => (&[], &["alpha"]),
        Command::Figure(_) => (&[], &[]),
    }
}

fn parse_branches(s: &str) -> Result<Vec<Branch>, CliError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "both" | "all" => Ok(vec![Branch::Cosine, Branch::Sine]),
        list => {
            let mut out = Vec::new();
            for item in list.split(',') {
                let b = item.trim().parse::<Branch>().map_err(|e| usage(e.to_string()))?;
                if !out.contains(&b) {
                    out.push(b);
                }
            }
            Ok(out)
        }
    }
}

fn positive(key: &str, s: &str) -> Result<f64, CliError> {
    let v: f64 = s.trim().parse().map_err(|_| usage(format!("{key}: '{s}' is not a number")))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(usage(format!("{key} must be positive and finite, got {s}")))
    }
}

impl RunConfig {
    /// Resolve a command and its key/value settings. Keys the command does
    /// not use are rejected.
    pub fn from_map(command: Command, map: &BTreeMap<String, String>) -> Result<Self, CliError> {
        if let Command::Figure(n) = command {
            if !(1..=9).contains(&n) {
                return Err(usage(format!("figure number must be 1..9, got {n}")));
            }
        }
        let (defs, allowed) = defaults(command);
        for key in map.keys() {
            let common = COMMON_KEYS.contains(&key.as_str());
            if !common && !allowed.contains(&key.as_str()) {
                return Err(usage(format!("'{key}' does not apply to {command}")));
            }
        }
        let get = |key: &str, fallback: &'static str| -> String {
            map.get(key)
                .cloned()
                .or_else(|| defs.iter().find(|(k, _)| *k == key).map(|(_, v)| v.to_string()))
                .unwrap_or_else(|| fallback.to_string())
        };
        let grid = |key: &str, fallback: &'static str| {
            grid::parse_grid(&get(key, fallback)).map_err(|e| usage(format!("{key}: {e}")))
        };
        let index_grid = |key: &str, fallback: &'static str| {
            grid::parse_index_grid(&get(key, fallback)).map_err(|e| usage(format!("{key}: {e}")))
        };

        let d_theta = grid("Dtheta", "0")?;
        if let Some(bad) = d_theta.iter().find(|d| **d < 0.0) {
            return Err(usage(format!(
                "Dtheta must be non-negative (energies are even in it), got {bad}"
            )));
        }
        let r = grid("r", "0")?;
        if let Some(bad) = r.iter().find(|v| **v < 0.0) {
            return Err(usage(format!("r must be non-negative, got {bad}")));
        }
        let out = map.get("out").map(PathBuf::from);
        Ok(Self {
            command,
            n: index_grid("n", "1")?,
            m: index_grid("m", "0")?,
            branches: parse_branches(&get("branch", "cosine"))?,
            d_r: grid("Dr", "0")?,
            d_theta,
            z: positive("Z", &get("Z", "1"))?,
            alpha: match map.get("alpha") {
                Some(s) => positive("alpha", s)?,
                None => FINE_STRUCTURE,
            },
            mode: get("mode", "spin").parse().map_err(|e: kratzer::Error| usage(e.to_string()))?,
            format: get("format", "csv").parse().map_err(usage)?,
            out,
            tol: positive("tol", &get("tol", "1e-10"))?,
            coupling: get("coupling", "spin-limit").parse().map_err(usage)?,
            r,
            theta: grid("theta", "0")?,
        })
    }
}

/// Execute a resolved configuration and write its table.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let table = commands::run(cfg)?;
    let text = table.render(cfg.format);
    match &cfg.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Merge a config file (if any) with flag overrides and run.
pub fn run(cli: args::Cli) -> Result<(), CliError> {
    let (command, flags) = cli.command.split();
    let mut map = match &flags.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
            config::parse_config(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => BTreeMap::new(),
    };
    map.extend(flags.overrides());
    execute(&RunConfig::from_map(command, &map)?)
}
