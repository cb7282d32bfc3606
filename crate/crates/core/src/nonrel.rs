//! Schrödinger spectrum, bound-state criterion, critical dipole moments and
//! wavefunctions.
//!
//! Hartree atomic units throughout. The potential energy is
//! `U = −Z/r + D_r/r² + D_θ cos θ / r²`, which separates with
//! `ψ = r^(−1/2) R(r) Θ(θ)` into a Mathieu equation with parameter `p = 4 D_θ`
//! (angular eigenvalue `E_θ = −c_2m(4D_θ)/4`) and a Coulomb-like radial
//! equation with power-law exponent `λ = 1/2 + √(c_2m(4D_θ)/4 + 2D_r)`.

use crate::error::{Error, Result};
use crate::mathieu::{self, Branch, MathieuOptions, MathieuProblem, MathieuSolution};
use crate::roots;
use crate::specfun::RadialSolution;

/// Solver knobs shared by the non-relativistic and relativistic modules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub mathieu: MathieuOptions,
    /// Upper end of the D_θ search for critical moments.
    pub dtheta_ceiling: f64,
    /// Absolute tolerance on critical D_θ.
    pub critical_tol: f64,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            mathieu: MathieuOptions::default(),
            dtheta_ceiling: 100.0,
            critical_tol: 1e-9,
        }
    }
}

/// Central charge and the two dipole moments, in atomic units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    z: f64,
    d_r: f64,
    d_theta: f64,
}

impl PotentialParams {
    pub fn new(z: f64, d_r: f64, d_theta: f64) -> Result<Self> {
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::domain(format!("Z must be positive and finite, got {z}")));
        }
        if !d_r.is_finite() {
            return Err(Error::domain(format!("D_r must be finite, got {d_r}")));
        }
        if !(d_theta >= 0.0) || !d_theta.is_finite() {
            return Err(Error::domain(format!(
                "D_theta must be finite and non-negative, got {d_theta}"
            )));
        }
        Ok(Self { z, d_r, d_theta })
    }

    /// `Z = 1`, the electron/ion case.
    pub fn unit_charge(d_r: f64, d_theta: f64) -> Result<Self> {
        Self::new(1.0, d_r, d_theta)
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn d_r(&self) -> f64 {
        self.d_r
    }

    pub fn d_theta(&self) -> f64 {
        self.d_theta
    }

    /// Coefficient of `1/r` in the potential energy.
    pub fn coulomb_coefficient(&self) -> f64 {
        -self.z
    }

    pub fn with_d_theta(self, d_theta: f64) -> Result<Self> {
        Self::new(self.z, self.d_r, d_theta)
    }

    pub fn with_d_r(self, d_r: f64) -> Result<Self> {
        Self::new(self.z, d_r, self.d_theta)
    }

    /// Potential energy at `(r, θ)`.
    pub fn potential(&self, r: f64, theta: f64) -> f64 {
        -self.z / r + (self.d_r + self.d_theta * theta.cos()) / (r * r)
    }
}

/// Central Kratzer potential `d_e (r_e²/r² − 2 r_e/r)` written in the
/// `−Z/r + D_r/r²` form: `Z = 2 d_e r_e`, `D_r = d_e r_e²`, `D_θ = 0`.
pub fn kratzer_from_molecular(d_e: f64, r_e: f64) -> Result<PotentialParams> {
    if !(d_e > 0.0 && r_e > 0.0) {
        return Err(Error::domain(format!(
            "dissociation energy and bond length must be positive, got d_e = {d_e}, r_e = {r_e}"
        )));
    }
    PotentialParams::new(2.0 * d_e * r_e, d_e * r_e * r_e, 0.0)
}

/// Quantum numbers `n = n_r + m` and the angular branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    n: u32,
    m: u32,
    branch: Branch,
}

impl QuantumState {
    pub fn new(n: u32, m: u32, branch: Branch) -> Result<Self> {
        if n < m {
            return Err(Error::domain(format!("n = {n} must be >= m = {m}")));
        }
        if branch == Branch::Sine && m == 0 {
            return Err(Error::domain("m = 0 has no sine state"));
        }
        Ok(Self { n, m, branch })
    }

    /// Sign of `m` does not enter the spectrum.
    pub fn with_signed_m(n: u32, m: i64, branch: Branch) -> Result<Self> {
        let m = u32::try_from(m.unsigned_abs())
            .map_err(|_| Error::domain(format!("m = {m} out of range")))?;
        Self::new(n, m, branch)
    }

    pub fn from_radial(n_r: u32, m: u32, branch: Branch) -> Result<Self> {
        Self::new(n_r + m, m, branch)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n_r(&self) -> u32 {
        self.n - self.m
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    RootFound,
    Expansion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyResult {
    /// Hartree.
    pub energy: f64,
    pub provenance: Provenance,
    /// Mathieu characteristic value that entered the energy.
    pub char_value: f64,
    /// Its truncation error estimate.
    pub est_error: f64,
}

pub(crate) fn mathieu_value(m: u32, branch: Branch, p: f64, opts: &MathieuOptions) -> Result<f64> {
    mathieu::char_value(&MathieuProblem::new(m, branch, p)?, opts)
}

/// `E_θ = −c_2m(4 D_θ)/4`.
pub fn angular_eigenvalue(m: u32, branch: Branch, d_theta: f64, settings: &Settings) -> Result<f64> {
    Ok(-0.25 * mathieu_value(m, branch, 4.0 * d_theta, &settings.mathieu)?)
}

/// `c_2m(4D_θ)/4 + 2D_r`, the square of `λ − 1/2`.
fn lambda_shift_sq(state: &QuantumState, params: &PotentialParams, settings: &Settings) -> Result<(f64, MathieuSolution)> {
    let prob = MathieuProblem::new(state.m, state.branch, 4.0 * params.d_theta)?;
    let sol = mathieu::solve(&prob, &settings.mathieu)?;
    Ok((0.25 * sol.char_value + 2.0 * params.d_r, sol))
}

/// `c_2m(4D_θ)/4 + 2D_r ≥ 0`.
pub fn bound_state_exists(state: &QuantumState, params: &PotentialParams, settings: &Settings) -> Result<bool> {
    let c = mathieu_value(state.m, state.branch, 4.0 * params.d_theta, &settings.mathieu)?;
    Ok(0.25 * c + 2.0 * params.d_r >= 0.0)
}

fn no_bound_state(state: &QuantumState, params: &PotentialParams, c: f64) -> Error {
    Error::NoBoundState(format!(
        "(n={}, m={}, {}) at D_r = {}, D_theta = {}: c_2m(4 D_theta)/4 + 2 D_r = {} < 0 \
         (D_r is below its critical value {} for this D_theta)",
        state.n,
        state.m,
        state.branch,
        params.d_r,
        params.d_theta,
        0.25 * c + 2.0 * params.d_r,
        -c / 8.0
    ))
}

/// Closed-form energy
/// `E = −2Z² (n − m + 1/2 + √(c_2m(4D_θ)/4 + 2D_r))^(−2)`.
pub fn energy(state: &QuantumState, params: &PotentialParams, settings: &Settings) -> Result<EnergyResult> {
    let prob = MathieuProblem::new(state.m, state.branch, 4.0 * params.d_theta)?;
    let (c, est_error) = mathieu::char_value_with_error(&prob, &settings.mathieu)?;
    let s2 = 0.25 * c + 2.0 * params.d_r;
    if !(s2 >= 0.0) {
        return Err(no_bound_state(state, params, c));
    }
    let x = f64::from(state.n_r()) + 0.5 + s2.sqrt();
    Ok(EnergyResult {
        energy: -2.0 * params.z * params.z / (x * x),
        provenance: Provenance::ClosedForm,
        char_value: c,
        est_error,
    })
}

/// Central-Kratzer limit (`D_θ = 0`) of [`energy`], without a Mathieu solve.
pub fn kratzer_energy(state: &QuantumState, params: &PotentialParams) -> Result<f64> {
    let m = f64::from(state.m);
    let s2 = m * m + 2.0 * params.d_r;
    if !(s2 >= 0.0) {
        return Err(no_bound_state(state, params, 4.0 * m * m));
    }
    let x = f64::from(state.n_r()) + 0.5 + s2.sqrt();
    Ok(-2.0 * params.z * params.z / (x * x))
}

/// Critical `D_θ` for `c_2m(4k D_θ) + 8k D_r`; `k = 1` is the Schrödinger
/// criterion, `k = 2` the doubled couplings of the spin-symmetric
/// weak-coupling limit.
///
/// If the state is bound at `D_θ = 0` this is the smallest root. If it is
/// unbound there (possible for `m ≥ 1` with `D_r < 0`, since `c_2m` first
/// rises), it is the upper edge of the bound window found by a grid scan,
/// or `None` if no window exists below the ceiling.
pub(crate) fn critical_dtheta_scaled(
    m: u32,
    branch: Branch,
    d_r: f64,
    coupling: f64,
    settings: &Settings,
) -> Result<Option<f64>> {
    MathieuProblem::new(m, branch, 0.0)?;
    let f = |d: f64| -> Result<f64> {
        Ok(mathieu_value(m, branch, 4.0 * coupling * d, &settings.mathieu)? + 8.0 * coupling * d_r)
    };
    let f0 = f(0.0)?;
    if f0 == 0.0 {
        return Ok(Some(0.0));
    }
    let ceiling = settings.dtheta_ceiling;
    if f0 < 0.0 {
        return window_edge(f, ceiling, settings.critical_tol);
    }
    let mut lo = 0.0;
    let mut hi = (-8.0 * d_r).max(1.0).min(ceiling);
    loop {
        if f(hi)? < 0.0 {
            break;
        }
        if hi >= ceiling {
            return Ok(None);
        }
        lo = hi;
        hi = (2.0 * hi).min(ceiling);
    }
    let root = roots::bisect(f, lo, hi, 0.0, settings.critical_tol)?;
    Ok(Some(root.x))
}

const WINDOW_SCAN_POINTS: u32 = 2000;

fn window_edge<F>(mut f: F, ceiling: f64, tol: f64) -> Result<Option<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let step = ceiling / f64::from(WINDOW_SCAN_POINTS);
    let mut inside = false;
    let mut prev = 0.0;
    for i in 1..=WINDOW_SCAN_POINTS {
        let d = step * f64::from(i);
        let v = f(d)?;
        if !inside && v > 0.0 {
            inside = true;
        } else if inside && v < 0.0 {
            return roots::bisect(f, prev, d, 0.0, tol).map(|r| Some(r.x));
        }
        prev = d;
    }
    Ok(None)
}

/// Critical angular moment for `c_2m(4D_θ) + 8D_r`: the `D_θ` where the
/// bound state disappears. `Some(0)` when the criterion is zero at
/// `D_θ = 0`; `None` if the state is never bound, or stays bound up to
/// `settings.dtheta_ceiling`.
pub fn critical_dtheta(m: u32, branch: Branch, d_r: f64, settings: &Settings) -> Result<Option<f64>> {
    critical_dtheta_scaled(m, branch, d_r, 1.0, settings)
}

/// Critical radial moment `−c_2m(4D_θ)/8`; bound states need `D_r` above it.
pub fn critical_dr(m: u32, branch: Branch, d_theta: f64, settings: &Settings) -> Result<f64> {
    Ok(-mathieu_value(m, branch, 4.0 * d_theta, &settings.mathieu)? / 8.0)
}

/// Separated wavefunction `ψ(r, θ) = R(r)/√r · Θ(θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wavefunction {
    pub state: QuantumState,
    pub radial: RadialSolution,
    pub angular: MathieuSolution,
}

impl Wavefunction {
    /// `ψ(r, θ)`, normalized to `∫∫ ψ² r dr dθ = 1`.
    pub fn eval(&self, r: f64, theta: f64) -> f64 {
        self.radial.eval(r) * self.angular.eval_theta(theta)
    }

    /// Energy eigenvalue of the radial equation this wavefunction solves,
    /// `−β²/2`.
    pub fn radial_energy(&self) -> f64 {
        -0.5 * self.radial.beta * self.radial.beta
    }

    /// `E_θ` of the angular factor.
    pub fn angular_eigenvalue(&self) -> f64 {
        -0.25 * self.angular.char_value
    }
}

/// Radial parameters from the termination condition of ₁F₁:
/// `λ = 1/2 + √(c_2m(4D_θ)/4 + 2D_r)`, `β = Z/(n_r + λ)`.
pub fn radial_solution(state: &QuantumState, params: &PotentialParams, settings: &Settings) -> Result<RadialSolution> {
    Ok(wavefunction(state, params, settings)?.radial)
}

pub fn wavefunction(state: &QuantumState, params: &PotentialParams, settings: &Settings) -> Result<Wavefunction> {
    let (s2, angular) = lambda_shift_sq(state, params, settings)?;
    if !(s2 > 0.0) {
        return Err(no_bound_state(state, params, angular.char_value));
    }
    let lambda = 0.5 + s2.sqrt();
    let beta = params.z / (f64::from(state.n_r()) + lambda);
    let radial = RadialSolution::new(beta, lambda, state.n_r())?;
    Ok(Wavefunction {
        state: *state,
        radial,
        angular,
    })
}

/// `ψ(r, θ)` for a single point. Prefer [`wavefunction`] for many points.
pub fn wavefunction_value(
    state: &QuantumState,
    params: &PotentialParams,
    r: f64,
    theta: f64,
    settings: &Settings,
) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("r must be positive, got {r}")));
    }
    Ok(wavefunction(state, params, settings)?.eval(r, theta))
}
