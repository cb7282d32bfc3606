//! Relativistic spectra under spin and pseudo-spin symmetry.
//!
//! With `S = ±U` the Klein-Gordon and Dirac equations reduce to a
//! Schrödinger-type equation with energy-dependent couplings. Separating it
//! as in the non-relativistic case gives two relations for the angular
//! eigenvalue `E_θ`, one from the Mathieu equation and one from the radial
//! quantization; the energy (`E = E_total − c²`, Hartree, `c = 1/α`) is where
//! they intersect.
//!
//! Spin symmetry, with `x = Eα² + 2` and `g(E) = Z √(x / (−E))`:
//!
//! ```text
//! E_θ = −c_2m(4x D_θ)/4
//! E_θ = 2x D_r − (n_r + 1/2 − g(E))²
//! ```
//!
//! Pseudo-spin symmetry, with `u = Eα²`:
//!
//! ```text
//! E_θ = −c_2m(4u D_θ)/4
//! E_θ = 2u D_r − (n_r + 1/2 − Zα u / √(1 − (u + 1)²))²
//! ```

use crate::error::{Error, Result};
use crate::mathieu::Branch;
use crate::nonrel::{self, mathieu_value, PotentialParams, Provenance, QuantumState, Settings};
use crate::roots::{self, Root};
use crate::specfun::RadialSolution;
use std::fmt;
use std::str::FromStr;

/// CODATA 2018 inverse fine-structure constant, rounded.
pub const FINE_STRUCTURE: f64 = 1.0 / 137.035_999;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryMode {
    Spin,
    PseudoSpin,
}

impl fmt::Display for SymmetryMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryMode::Spin => "spin",
            SymmetryMode::PseudoSpin => "pseudospin",
        })
    }
}

impl FromStr for SymmetryMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "spin" => Ok(SymmetryMode::Spin),
            "pseudospin" | "pseudo" => Ok(SymmetryMode::PseudoSpin),
            other => Err(Error::domain(format!("unknown symmetry mode '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelOptions {
    pub alpha: f64,
    /// Energy window searched in pseudo-spin mode, Hartree.
    pub pseudo_window: (f64, f64),
    /// Largest D_θ increment between continuation steps.
    pub continuation_step: f64,
    /// Points in the fallback sign-change scan.
    pub scan_points: usize,
    /// Relative bisection tolerance in E.
    pub rel_tol: f64,
    /// Largest accepted `|F(E)|` at a returned root.
    pub residual_tol: f64,
}

impl Default for RelOptions {
    fn default() -> Self {
        Self {
            alpha: FINE_STRUCTURE,
            pseudo_window: (-200.0, 0.0),
            continuation_step: 0.25,
            scan_points: 2048,
            rel_tol: 1e-12,
            residual_tol: 1e-10,
        }
    }
}

impl RelOptions {
    pub fn with_alpha(alpha: f64) -> Self {
        Self { alpha, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(Error::domain(format!("alpha must be positive, got {}", self.alpha)));
        }
        let (lo, hi) = self.pseudo_window;
        if !(lo < hi && hi <= 0.0 && lo.is_finite()) {
            return Err(Error::domain(format!("invalid energy window ({lo}, {hi})")));
        }
        if self.scan_points < 2 {
            return Err(Error::domain("scan needs at least two points"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelEnergyResult {
    /// `E_total − μc²`, Hartree.
    pub energy: f64,
    /// `|angular E_θ − radial E_θ|` at the root.
    pub residual: f64,
    pub bracket: (f64, f64),
    pub provenance: Provenance,
}

/// Difference of the two spin-symmetry `E_θ` relations (radial minus
/// angular), i.e. `2xD_r + c_2m(4xD_θ)/4 − (n_r + 1/2 − g)²`.
pub fn spin_residual(
    state: &QuantumState,
    params: &PotentialParams,
    alpha: f64,
    energy: f64,
    settings: &Settings,
) -> Result<f64> {
    let x = energy * alpha * alpha + 2.0;
    let g = params.z() * (x / -energy).sqrt();
    let c = mathieu_value(state.m(), state.branch(), 4.0 * x * params.d_theta(), &settings.mathieu)?;
    let t = f64::from(state.n_r()) + 0.5 - g;
    Ok(2.0 * x * params.d_r() + 0.25 * c - t * t)
}

/// Pseudo-spin analogue of [`spin_residual`].
pub fn pseudospin_residual(
    state: &QuantumState,
    params: &PotentialParams,
    alpha: f64,
    energy: f64,
    settings: &Settings,
) -> Result<f64> {
    let u = energy * alpha * alpha;
    // 1 − (u+1)² = −u(u+2), written without cancellation
    let h = params.z() * alpha * u / (-u * (u + 2.0)).sqrt();
    let c = mathieu_value(state.m(), state.branch(), 4.0 * u * params.d_theta(), &settings.mathieu)?;
    let t = f64::from(state.n_r()) + 0.5 - h;
    Ok(2.0 * u * params.d_r() + 0.25 * c - t * t)
}

/// Energy where `g(E) = n_r + 1/2`, the apex of the radial relation. Physical
/// roots (`λ ≥ 1/2`) lie in `(apex, 0)`.
fn spin_apex(state: &QuantumState, params: &PotentialParams, alpha: f64) -> f64 {
    let k = f64::from(state.n_r()) + 0.5;
    let z2 = params.z() * params.z();
    -2.0 * z2 / (k * k + z2 * alpha * alpha)
}

/// Weak-coupling closed form at `D_θ = 0`, used to seed continuation.
fn spin_seed(state: &QuantumState, params: &PotentialParams, alpha: f64) -> Option<f64> {
    let m = f64::from(state.m());
    let s2 = m * m + 4.0 * params.d_r();
    if !(s2 >= 0.0) {
        return None;
    }
    let g = f64::from(state.n_r()) + 0.5 + s2.sqrt();
    let z2 = params.z() * params.z();
    Some(-2.0 * z2 / (g * g + z2 * alpha * alpha))
}

struct SpinProblem<'a> {
    state: &'a QuantumState,
    z: f64,
    d_r: f64,
    alpha: f64,
    settings: &'a Settings,
    lo: f64,
    hi: f64,
}

impl SpinProblem<'_> {
    fn residual(&self, d_theta: f64, e: f64) -> Result<f64> {
        let params = PotentialParams::new(self.z, self.d_r, d_theta)?;
        spin_residual(self.state, &params, self.alpha, e, self.settings)
    }

    /// Bracket around `guess` by symmetric geometric growth inside the
    /// physical interval, then bisect.
    fn local_root(&self, d_theta: f64, guess: f64, rel_tol: f64) -> Result<Option<Root>> {
        let f = |e: f64| self.residual(d_theta, e);
        let mut delta = 1e-3 * guess.abs();
        loop {
            let a = (guess - delta).max(self.lo);
            let b = (guess + delta).min(self.hi);
            let (fa, fb) = (f(a)?, f(b)?);
            if fa.signum() != fb.signum() || fa == 0.0 || fb == 0.0 {
                return roots::bisect(f, a, b, rel_tol, 0.0).map(Some);
            }
            if a <= self.lo && b >= self.hi {
                return Ok(None);
            }
            delta *= 4.0;
        }
    }

    /// Every sign change on a geometric grid across the physical interval;
    /// the root nearest `target` wins.
    fn scan_root(&self, d_theta: f64, target: f64, rel_tol: f64, points: usize) -> Result<Option<Root>> {
        let f = |e: f64| self.residual(d_theta, e);
        let grid = roots::geometric_negative_grid(-self.hi, -self.lo, points);
        let mut best: Option<Root> = None;
        for (a, b) in roots::sign_changes(f, &grid)? {
            let root = roots::bisect(f, a, b, rel_tol, 0.0)?;
            let closer = best.is_none_or(|r| (root.x - target).abs() < (r.x - target).abs());
            if closer {
                best = Some(root);
            }
        }
        Ok(best)
    }
}

/// Spin-symmetry energy: root of [`spin_residual`] on the physical branch,
/// continued in D_θ from the `D_θ = 0` weak-coupling seed.
pub fn spin_energy(
    state: &QuantumState,
    params: &PotentialParams,
    opts: &RelOptions,
    settings: &Settings,
) -> Result<RelEnergyResult> {
    opts.validate()?;
    let alpha = opts.alpha;
    let apex = spin_apex(state, params, alpha);
    let problem = SpinProblem {
        state,
        z: params.z(),
        d_r: params.d_r(),
        alpha,
        settings,
        lo: apex,
        hi: apex * 1e-12,
    };
    let target_d = params.d_theta();
    let loose = 1e-8_f64.max(opts.rel_tol);

    let mut guess = spin_seed(state, params, alpha);
    if let Some(seed) = guess {
        let steps = (target_d / opts.continuation_step).ceil().max(1.0) as usize;
        for k in 0..steps {
            let d = if k + 1 == steps {
                target_d
            } else {
                target_d * (k as f64) / (steps as f64)
            };
            let g = guess.unwrap_or(seed).clamp(problem.lo, problem.hi);
            match problem.local_root(d, g, loose)? {
                Some(root) => guess = Some(root.x),
                None => {
                    guess = None;
                    break;
                }
            }
        }
    }

    let root = match guess.map(|g| problem.local_root(target_d, g, opts.rel_tol)).transpose()?.flatten() {
        Some(root) => Some(root),
        None => {
            let target = match expansion_energy(state, params, opts, settings) {
                Ok(e) => e.energy,
                Err(_) => problem.hi,
            };
            problem.scan_root(target_d, target, opts.rel_tol, opts.scan_points)?
        }
    };
    let root = root.ok_or_else(|| {
        Error::NoBoundState(format!(
            "spin symmetry (n={}, m={}, {}) at D_r = {}, D_theta = {}, alpha = {}: \
             angular and radial relations do not intersect (critical moment exceeded)",
            state.n(),
            state.m(),
            state.branch(),
            params.d_r(),
            params.d_theta(),
            alpha
        ))
    })?;
    finish(root, opts)
}

fn finish(root: Root, opts: &RelOptions) -> Result<RelEnergyResult> {
    let residual = root.fx.abs();
    if residual > opts.residual_tol {
        return Err(Error::SolverFailure {
            what: "relativistic energy root",
            estimate: root.x,
            est_error: residual,
        });
    }
    Ok(RelEnergyResult {
        energy: root.x,
        residual,
        bracket: root.bracket,
        provenance: Provenance::RootFound,
    })
}

/// Pseudo-spin energy: the least negative root of [`pseudospin_residual`]
/// in `opts.pseudo_window`, or `None`.
pub fn pseudospin_energy(
    state: &QuantumState,
    params: &PotentialParams,
    opts: &RelOptions,
    settings: &Settings,
) -> Result<Option<RelEnergyResult>> {
    opts.validate()?;
    let (lo, hi) = opts.pseudo_window;
    let eps = 1e-9 * (hi - lo);
    let near = (-hi).max(0.0) + eps;
    let far = -lo - eps;
    let f = |e: f64| pseudospin_residual(state, params, opts.alpha, e, settings);
    let grid = roots::geometric_negative_grid(near, far, opts.scan_points);
    // grid runs from near zero outward, so the first sign change is the
    // least negative root
    match roots::sign_changes(f, &grid)?.first() {
        Some(&(a, b)) => {
            let root = roots::bisect(f, a, b, opts.rel_tol, 0.0)?;
            finish(root, opts).map(Some)
        }
        None => Ok(None),
    }
}

/// Dispatch on the symmetry mode; `None` when no root exists.
pub fn rel_energy(
    state: &QuantumState,
    params: &PotentialParams,
    mode: SymmetryMode,
    opts: &RelOptions,
    settings: &Settings,
) -> Result<Option<RelEnergyResult>> {
    match mode {
        SymmetryMode::Spin => match spin_energy(state, params, opts, settings) {
            Ok(r) => Ok(Some(r)),
            Err(Error::NoBoundState(_)) => Ok(None),
            Err(e) => Err(e),
        },
        SymmetryMode::PseudoSpin => pseudospin_energy(state, params, opts, settings),
    }
}

/// Series of the spin-symmetry energy in `α²`:
///
/// ```text
/// E ≈ −2Z²/X² + 2Z⁴α²/X⁴,   X = n_r + 1/2 + √(c_2m(8D_θ)/4 + 4D_r)
/// ```
pub fn expansion_energy(
    state: &QuantumState,
    params: &PotentialParams,
    opts: &RelOptions,
    settings: &Settings,
) -> Result<RelEnergyResult> {
    let c = mathieu_value(state.m(), state.branch(), 8.0 * params.d_theta(), &settings.mathieu)?;
    let s2 = 0.25 * c + 4.0 * params.d_r();
    if !(s2 >= 0.0) {
        return Err(Error::NoBoundState(format!(
            "c_2m(8 D_theta)/4 + 4 D_r = {s2} < 0 at D_r = {}, D_theta = {}",
            params.d_r(),
            params.d_theta()
        )));
    }
    let x = f64::from(state.n_r()) + 0.5 + s2.sqrt();
    let z2 = params.z() * params.z();
    let a2 = opts.alpha * opts.alpha;
    let x2 = x * x;
    Ok(RelEnergyResult {
        energy: -2.0 * z2 / x2 + 2.0 * z2 * z2 * a2 / (x2 * x2),
        residual: 0.0,
        bracket: (f64::NAN, f64::NAN),
        provenance: Provenance::Expansion,
    })
}

/// `β = √(−E(Eα² + 2))`, `λ = 1/2 + √(c_2m(4xD_θ)/4 + 2xD_r)` for a
/// spin-symmetry energy, with the matching normalization constant.
pub fn rel_wavefunction_params(
    state: &QuantumState,
    params: &PotentialParams,
    alpha: f64,
    energy: f64,
    settings: &Settings,
) -> Result<RadialSolution> {
    let x = energy * alpha * alpha + 2.0;
    let beta_sq = -energy * x;
    if !(beta_sq > 0.0) {
        return Err(Error::domain(format!(
            "E = {energy} is not a bound energy (beta² = {beta_sq})"
        )));
    }
    let c = mathieu_value(state.m(), state.branch(), 4.0 * x * params.d_theta(), &settings.mathieu)?;
    let s2 = 0.25 * c + 2.0 * x * params.d_r();
    if !(s2 > 0.0) {
        return Err(Error::domain(format!("lambda is complex: −E_θ + 2x D_r = {s2}")));
    }
    RadialSolution::new(beta_sq.sqrt(), 0.5 + s2.sqrt(), state.n_r())
}

/// Critical D_θ of the spin-symmetric weak-coupling limit, where the
/// couplings double: the `D_θ` at which `c_2m(8D_θ) + 16 D_r` turns
/// negative. Same conventions as [`nonrel::critical_dtheta`].
pub fn critical_dtheta_limit(m: u32, branch: Branch, d_r: f64, settings: &Settings) -> Result<Option<f64>> {
    nonrel::critical_dtheta_scaled(m, branch, d_r, 2.0, settings)
}

/// Smallest D_θ at which the relativistic root disappears, by bisection on
/// D_θ over full solver calls. `None` if there is no root at `D_θ = 0` or no
/// transition below `settings.dtheta_ceiling`.
pub fn critical_dtheta_rel(
    state: &QuantumState,
    d_r: f64,
    z: f64,
    mode: SymmetryMode,
    opts: &RelOptions,
    settings: &Settings,
) -> Result<Option<f64>> {
    let has_root = |d: f64| -> Result<bool> {
        let params = PotentialParams::new(z, d_r, d)?;
        Ok(rel_energy(state, &params, mode, opts, settings)?.is_some())
    };
    if !has_root(0.0)? {
        return Ok(None);
    }
    let ceiling = settings.dtheta_ceiling;
    // The weak-coupling value is a close first guess for spin symmetry.
    let start = match mode {
        SymmetryMode::Spin => critical_dtheta_limit(state.m(), state.branch(), d_r, settings)?
            .filter(|d| *d > 0.0)
            .unwrap_or(1.0),
        SymmetryMode::PseudoSpin => 1.0,
    };
    let (mut lo, mut hi) = if has_root(start)? {
        let mut lo = start;
        let mut step = 0.01 * start.max(1.0);
        loop {
            let hi = (lo + step).min(ceiling);
            if !has_root(hi)? {
                break (lo, hi);
            }
            if hi >= ceiling {
                return Ok(None);
            }
            lo = hi;
            step *= 2.0;
        }
    } else {
        let mut hi = start;
        let mut step = 0.01 * start.max(1.0);
        loop {
            let lo = (hi - step).max(0.0);
            if has_root(lo)? {
                break (lo, hi);
            }
            hi = lo;
            step *= 2.0;
        }
    };
    while hi - lo > settings.critical_tol.max(1e-12 * hi) {
        let mid = 0.5 * (lo + hi);
        if has_root(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}
