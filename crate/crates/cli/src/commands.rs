//! Table builders for each command. Grid points are evaluated in parallel
//! and collected in grid order.

use crate::output::{Cell, Table};
use crate::{CliError, Command, Coupling, RunConfig};
use kratzer::nonrel::{self, energy};
use kratzer::rel::{self, expansion_energy, rel_energy};
use kratzer::{Branch, Error, MathieuOptions, PotentialParams, QuantumState, RelOptions, Settings, SymmetryMode};
use rayon::prelude::*;

const BOUND: &str = "bound";
const UNBOUND: &str = "unbound";

fn settings(cfg: &RunConfig) -> Settings {
    Settings {
        mathieu: MathieuOptions {
            tol: cfg.tol,
            ..MathieuOptions::default()
        },
        ..Settings::default()
    }
}

fn solver(context: String, e: Error) -> CliError {
    CliError::Solver(format!("{context}: {e}"))
}

fn params(z: f64, d_r: f64, d_theta: f64) -> Result<PotentialParams, CliError> {
    PotentialParams::new(z, d_r, d_theta).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    match cfg.command {
        Command::Spectrum => spectrum(cfg, &states(cfg), &cfg.d_r, &cfg.d_theta),
        Command::Critical => critical(cfg),
        Command::Table1 => table1(cfg),
        Command::Wavefunction => wavefunction(cfg),
        Command::Relativistic => relativistic(cfg, &states(cfg), &cfg.d_r, &cfg.d_theta),
        Command::Figure(n) => figure(cfg, n),
    }
}

/// Valid `(n, m, branch)` combinations of the configured grids.
fn states(cfg: &RunConfig) -> Vec<QuantumState> {
    let mut out = Vec::new();
    for &n in &cfg.n {
        for &m in &cfg.m {
            for &b in &cfg.branches {
                if let Ok(s) = QuantumState::new(n, m, b) {
                    out.push(s);
                }
            }
        }
    }
    out
}

fn state_cells(s: &QuantumState) -> [Cell; 3] {
    [s.n().into(), s.m().into(), s.branch().as_str().into()]
}

fn spectrum(cfg: &RunConfig, states: &[QuantumState], d_r: &[f64], d_theta: &[f64]) -> Result<Table, CliError> {
    let st = settings(cfg);
    let mut points = Vec::new();
    for s in states {
        for &dr in d_r {
            for &dt in d_theta {
                points.push((*s, dr, dt));
            }
        }
    }
    let rows = points
        .par_iter()
        .map(|&(s, dr, dt)| {
            let p = params(cfg.z, dr, dt)?;
            let (e, status) = match energy(&s, &p, &st) {
                Ok(r) => (Cell::from(r.energy), BOUND),
                Err(Error::NoBoundState(_)) => (Cell::Empty, UNBOUND),
                Err(e) => return Err(solver(format!("energy at {s:?}, D_r = {dr}, D_theta = {dt}"), e)),
            };
            let [n, m, b] = state_cells(&s);
            Ok(vec![n, m, b, dr.into(), dt.into(), e, status.into()])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut t = Table::new(vec!["n", "m", "branch", "D_r", "D_theta", "E", "status"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn critical_value(cfg: &RunConfig, m: u32, b: Branch, d_r: f64, st: &Settings) -> Result<Option<f64>, CliError> {
    let r = match cfg.coupling {
        Coupling::SpinLimit => rel::critical_dtheta_limit(m, b, d_r, st),
        Coupling::Schrodinger => nonrel::critical_dtheta(m, b, d_r, st),
    };
    r.map_err(|e| solver(format!("critical D_theta at m = {m}, {b}, D_r = {d_r}"), e))
}

fn critical_points(cfg: &RunConfig) -> Vec<(u32, Branch, f64)> {
    let mut points = Vec::new();
    for &m in &cfg.m {
        for &b in &cfg.branches {
            if b == Branch::Sine && m == 0 {
                continue;
            }
            for &dr in &cfg.d_r {
                points.push((m, b, dr));
            }
        }
    }
    points
}

fn critical(cfg: &RunConfig) -> Result<Table, CliError> {
    let st = settings(cfg);
    let rows = critical_points(cfg)
        .par_iter()
        .map(|&(m, b, dr)| {
            let v = critical_value(cfg, m, b, dr, &st)?;
            let status = if v.is_some() { "found" } else { "none" };
            Ok(vec![m.into(), b.as_str().into(), dr.into(), v.into(), status.into()])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut t = Table::new(vec!["m", "branch", "D_r", "D_theta_crit", "status"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn table1(cfg: &RunConfig) -> Result<Table, CliError> {
    let [branch] = cfg.branches[..] else {
        return Err(CliError::Usage("table1 needs a single branch".into()));
    };
    let st = settings(cfg);
    let mut cols = vec!["D_r".to_string()];
    for &m in &cfg.m {
        if branch == Branch::Sine && m == 0 {
            return Err(CliError::Usage("table1: the sine branch has no m = 0 column".into()));
        }
        cols.push(format!("m{m}"));
    }
    let rows = cfg
        .d_r
        .par_iter()
        .map(|&dr| {
            let mut row = vec![Cell::from(dr)];
            for &m in &cfg.m {
                row.push(critical_value(cfg, m, branch, dr, &st)?.into());
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut t = Table::with_columns(cols);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn scalar<T: Copy>(key: &str, v: &[T]) -> Result<T, CliError> {
    match v {
        [x] => Ok(*x),
        _ => Err(CliError::Usage(format!("wavefunction needs a single value for {key}"))),
    }
}

fn wavefunction(cfg: &RunConfig) -> Result<Table, CliError> {
    let (n, m) = (scalar("n", &cfg.n)?, scalar("m", &cfg.m)?);
    let branch = scalar("branch", &cfg.branches)?;
    let (dr, dt) = (scalar("Dr", &cfg.d_r)?, scalar("Dtheta", &cfg.d_theta)?);
    let state = QuantumState::new(n, m, branch).map_err(|e| CliError::Usage(e.to_string()))?;
    let p = params(cfg.z, dr, dt)?;
    let wf = match nonrel::wavefunction(&state, &p, &settings(cfg)) {
        Ok(w) => Some(w),
        // λ = 1/2 exactly is the edge of the bound region and not normalizable
        Err(Error::NoBoundState(_)) => None,
        Err(Error::Domain(msg)) if msg.contains("lambda") => None,
        Err(e) => return Err(solver(format!("wavefunction at {state:?}, D_r = {dr}, D_theta = {dt}"), e)),
    };
    let mut t = Table::new(vec!["r", "theta", "psi", "status"]);
    for &r in &cfg.r {
        for &th in &cfg.theta {
            let (psi, status) = match &wf {
                Some(w) => (Cell::from(w.eval(r, th)), BOUND),
                None => (Cell::Empty, UNBOUND),
            };
            t.push(vec![r.into(), th.into(), psi, status.into()]);
        }
    }
    Ok(t)
}

fn relativistic(cfg: &RunConfig, states: &[QuantumState], d_r: &[f64], d_theta: &[f64]) -> Result<Table, CliError> {
    let st = settings(cfg);
    let opts = RelOptions::with_alpha(cfg.alpha);
    let mut points = Vec::new();
    for s in states {
        for &dr in d_r {
            for &dt in d_theta {
                points.push((*s, dr, dt));
            }
        }
    }
    let rows = points
        .par_iter()
        .map(|&(s, dr, dt)| {
            let p = params(cfg.z, dr, dt)?;
            let ctx = || format!("{} energy at {s:?}, D_r = {dr}, D_theta = {dt}", cfg.mode);
            let root = rel_energy(&s, &p, cfg.mode, &opts, &st).map_err(|e| solver(ctx(), e))?;
            let [n, m, b] = state_cells(&s);
            let mut row = vec![n, m, b, dr.into(), dt.into()];
            match root {
                Some(r) => {
                    let exp = match cfg.mode {
                        SymmetryMode::Spin => match expansion_energy(&s, &p, &opts, &st) {
                            Ok(e) => Cell::from(e.energy),
                            Err(Error::NoBoundState(_)) => Cell::Empty,
                            Err(e) => return Err(solver(ctx(), e)),
                        },
                        SymmetryMode::PseudoSpin => Cell::Empty,
                    };
                    row.extend([Cell::from(r.energy), exp, Cell::from(r.residual), BOUND.into()]);
                }
                None => row.extend([Cell::Empty, Cell::Empty, Cell::Empty, UNBOUND.into()]),
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut t = Table::new(vec![
        "n", "m", "branch", "D_r", "D_theta", "E_root", "E_expansion", "residual", "status",
    ]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}

fn cos_sin(n: u32, m: u32) -> Vec<QuantumState> {
    [Branch::Cosine, Branch::Sine]
        .into_iter()
        .filter_map(|b| QuantumState::new(n, m, b).ok())
        .collect()
}

/// `0..=stop` in 100 steps, with `stop` 5 % past the largest critical value
/// rounded up to one decimal.
fn dtheta_axis(criticals: impl IntoIterator<Item = Option<f64>>) -> Vec<f64> {
    let top = criticals.into_iter().flatten().fold(0.0_f64, f64::max);
    let stop = if top > 0.0 { (10.5 * top).ceil() / 10.0 } else { 5.0 };
    (0..=100)
        .map(|i| crate::output::format_sig(stop * f64::from(i) / 100.0).parse().unwrap())
        .collect()
}

fn figure(cfg: &RunConfig, number: u8) -> Result<Table, CliError> {
    let st = settings(cfg);
    let crit = |coupling: Coupling, m: u32, b: Branch, dr: f64| {
        let c = RunConfig { coupling, ..cfg.clone() };
        critical_value(&c, m, b, dr, &st)
    };
    let schrod = |states: &[QuantumState], d_r: &[f64]| -> Result<Vec<f64>, CliError> {
        let mut cs = Vec::new();
        for s in states {
            for &dr in d_r {
                cs.push(crit(Coupling::Schrodinger, s.m(), s.branch(), dr)?);
            }
        }
        Ok(dtheta_axis(cs))
    };
    let spin_axis = |states: &[QuantumState], d_r: &[f64]| -> Result<Vec<f64>, CliError> {
        let mut cs = Vec::new();
        for s in states {
            for &dr in d_r {
                cs.push(crit(Coupling::SpinLimit, s.m(), s.branch(), dr)?);
            }
        }
        Ok(dtheta_axis(cs))
    };
    let cosine = |n: u32, m: u32| QuantumState::new(n, m, Branch::Cosine).expect("valid figure state");
    let spin_cfg = RunConfig {
        mode: SymmetryMode::Spin,
        ..cfg.clone()
    };
    match number {
        1 => {
            let states = [cosine(1, 0)];
            let d_r = [0.3, 0.6, 0.9];
            spectrum(cfg, &states, &d_r, &schrod(&states, &d_r)?)
        }
        2 => {
            let states: Vec<_> = (1..=5).map(|n| cosine(n, 0)).collect();
            spectrum(cfg, &states, &[0.5], &schrod(&states, &[0.5])?)
        }
        3 => {
            let states: Vec<_> = (1..=3).flat_map(|n| cos_sin(n, 1)).collect();
            spectrum(cfg, &states, &[0.5], &schrod(&states, &[0.5])?)
        }
        4 => {
            let states: Vec<_> = (0..=3).flat_map(|m| cos_sin(3, m)).collect();
            spectrum(cfg, &states, &[0.5], &schrod(&states, &[0.5])?)
        }
        5 => forbidden_region(cfg, &st),
        6 => {
            let d_r: Vec<f64> = (0..=20).map(|i| f64::from(i) / 20.0).collect();
            let d_theta: Vec<f64> = (0..=80).map(|i| f64::from(i) / 10.0).collect();
            spectrum(cfg, &[cosine(2, 1)], &d_r, &d_theta)
        }
        7 | 9 => {
            let states: Vec<_> = (1..=3).map(|n| cosine(n, 1)).collect();
            relativistic(&spin_cfg, &states, &[0.3], &spin_axis(&states, &[0.3])?)
        }
        8 => {
            let states = [cosine(2, 1)];
            let d_r = [0.0, 0.3, 0.6];
            relativistic(&spin_cfg, &states, &d_r, &spin_axis(&states, &d_r)?)
        }
        _ => Err(CliError::Usage(format!("figure number must be 1..9, got {number}"))),
    }
}

/// Boundary `D_r(D_θ)` below which the state is not bound.
fn forbidden_region(cfg: &RunConfig, st: &Settings) -> Result<Table, CliError> {
    let mut points = Vec::new();
    for m in 0..=2u32 {
        for b in [Branch::Cosine, Branch::Sine] {
            if b == Branch::Sine && m == 0 {
                continue;
            }
            for i in 0..=100 {
                points.push((m, b, f64::from(i) / 10.0));
            }
        }
    }
    let rows = points
        .par_iter()
        .map(|&(m, b, dt)| {
            let dr = match cfg.coupling {
                Coupling::Schrodinger => nonrel::critical_dr(m, b, dt, st),
                Coupling::SpinLimit => nonrel::critical_dr(m, b, 2.0 * dt, st).map(|v| 0.5 * v),
            }
            .map_err(|e| solver(format!("critical D_r at m = {m}, {b}, D_theta = {dt}"), e))?;
            Ok(vec![m.into(), b.as_str().into(), dt.into(), dr.into()])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let mut t = Table::new(vec!["m", "branch", "D_theta", "D_r_crit"]);
    rows.into_iter().for_each(|r| t.push(r));
    Ok(t)
}
