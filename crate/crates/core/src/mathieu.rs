//! Even-order periodic Mathieu functions.
//!
//! Solutions of
//!
//! ```text
//! y'' + (c − 2p cos 2z) y = 0
//! ```
//!
//! with period π in `z`: the cosine-elliptic `ce_2m(z) = Σ A_2r cos 2rz`
//! (characteristic value `a_2m(p)`) and the sine-elliptic
//! `se_2m(z) = Σ B_2r sin 2rz` (characteristic value `b_2m(p)`, `m ≥ 1`).
//!
//! The Fourier recurrences are symmetrized into a tridiagonal matrix
//!
//! ```text
//! cosine: diag (0, 4, 16, …, (2r)²), off-diag (√2·p, p, p, …)
//! sine:   diag (4, 16, 36, …),        off-diag (p, p, …)
//! ```
//!
//! and the wanted eigenvalue is picked by Sturm bisection. The truncation is
//! doubled until two successive estimates agree to the requested tolerance.
//! Fourier coefficients are normalized so that `∫₀^{2π} y(z)² dz = π`.

use crate::error::{Error, Result};
use crate::tridiag::SymTridiagonal;
use std::f64::consts::SQRT_2;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Cosine,
    Sine,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Cosine => "cosine",
            Branch::Sine => "sine",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cosine" | "cos" | "c" | "a" => Ok(Branch::Cosine),
            "sine" | "sin" | "s" | "b" => Ok(Branch::Sine),
            other => Err(Error::domain(format!("unknown branch '{other}'"))),
        }
    }
}

/// A Mathieu eigenproblem of order `2m` on one branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuProblem {
    order_m: u32,
    branch: Branch,
    p: f64,
}

impl MathieuProblem {
    pub fn new(order_m: u32, branch: Branch, p: f64) -> Result<Self> {
        if branch == Branch::Sine && order_m == 0 {
            return Err(Error::domain("sine branch requires m >= 1 (no b_0)"));
        }
        if !p.is_finite() {
            return Err(Error::domain(format!("Mathieu parameter must be finite, got {p}")));
        }
        Ok(Self { order_m, branch, p })
    }

    pub fn order_m(&self) -> u32 {
        self.order_m
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Index of the wanted eigenvalue in the ascending spectrum.
    fn eigen_index(&self) -> usize {
        match self.branch {
            Branch::Cosine => self.order_m as usize,
            Branch::Sine => self.order_m as usize - 1,
        }
    }

    fn matrix(&self, size: usize) -> SymTridiagonal {
        let p = self.p;
        match self.branch {
            Branch::Cosine => {
                let diag = (0..size).map(|r| (2.0 * r as f64).powi(2)).collect();
                let mut off = vec![p; size - 1];
                if let Some(first) = off.first_mut() {
                    *first = SQRT_2 * p;
                }
                SymTridiagonal::new(diag, off)
            }
            Branch::Sine => {
                let diag = (1..=size).map(|r| (2.0 * r as f64).powi(2)).collect();
                SymTridiagonal::new(diag, vec![p; size - 1])
            }
        }
    }

    fn initial_size(&self) -> usize {
        2 * self.order_m as usize + 16 + (2.0 * self.p.abs().sqrt()).ceil() as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MathieuOptions {
    /// Absolute tolerance on the characteristic value between truncations.
    pub tol: f64,
    /// Largest truncation size tried before giving up.
    pub max_size: usize,
}

impl Default for MathieuOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_size: 4096,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MathieuSolution {
    pub branch: Branch,
    pub order_m: u32,
    pub p: f64,
    /// `a_2m(p)` or `b_2m(p)`.
    pub char_value: f64,
    /// `A_0, A_2, A_4, …` (cosine) or `B_2, B_4, …` (sine).
    pub fourier_coeffs: Vec<f64>,
    pub truncation_size: usize,
    /// `|c(N) − c(2N)|` at the accepted truncation.
    pub est_error: f64,
}

impl MathieuSolution {
    /// `ce_2m(z)` or `se_2m(z)`.
    pub fn eval(&self, z: f64) -> f64 {
        match self.branch {
            Branch::Cosine => self
                .fourier_coeffs
                .iter()
                .enumerate()
                .map(|(r, a)| a * (2.0 * r as f64 * z).cos())
                .sum(),
            Branch::Sine => self
                .fourier_coeffs
                .iter()
                .enumerate()
                .map(|(r, b)| b * (2.0 * (r + 1) as f64 * z).sin())
                .sum(),
        }
    }

    /// Angular factor `Θ(θ) = y(θ/2)`, 2π-periodic in θ.
    pub fn eval_theta(&self, theta: f64) -> f64 {
        self.eval(0.5 * theta)
    }
}

fn converge(prob: &MathieuProblem, opts: &MathieuOptions) -> Result<(f64, usize, f64)> {
    let k = prob.eigen_index();
    let mut size = prob.initial_size().max(k + 2).min(opts.max_size);
    let mut prev = prob.matrix(size).eigenvalue(k);
    loop {
        let next_size = size * 2;
        if next_size > opts.max_size {
            return Err(Error::SolverFailure {
                what: "Mathieu truncation",
                estimate: prev,
                est_error: f64::NAN,
            });
        }
        let next = prob.matrix(next_size).eigenvalue_below(k, prev, 2.0 * opts.tol);
        let diff = (next - prev).abs();
        if diff <= opts.tol {
            return Ok((next, next_size, diff));
        }
        if next_size * 2 > opts.max_size {
            return Err(Error::SolverFailure {
                what: "Mathieu truncation",
                estimate: next,
                est_error: diff,
            });
        }
        prev = next;
        size = next_size;
    }
}

/// Characteristic value `a_2m(p)` (cosine) or `b_2m(p)` (sine).
pub fn char_value(prob: &MathieuProblem, opts: &MathieuOptions) -> Result<f64> {
    converge(prob, opts).map(|(c, _, _)| c)
}

/// Characteristic value and its truncation error estimate.
pub fn char_value_with_error(prob: &MathieuProblem, opts: &MathieuOptions) -> Result<(f64, f64)> {
    converge(prob, opts).map(|(c, _, err)| (c, err))
}

/// Characteristic value together with the normalized Fourier coefficients.
pub fn solve(prob: &MathieuProblem, opts: &MathieuOptions) -> Result<MathieuSolution> {
    let (char_value, size, est_error) = converge(prob, opts)?;
    let matrix = prob.matrix(size);
    let mut coeffs = matrix.eigenvector(char_value);
    if prob.branch == Branch::Cosine {
        coeffs[0] /= SQRT_2;
    }
    let pivot = coeffs
        .iter()
        .copied()
        .fold(0.0_f64, |best, c| if c.abs() > best.abs() { c } else { best });
    if pivot < 0.0 {
        coeffs.iter_mut().for_each(|c| *c = -*c);
    }
    // Drop the negligible tail.
    let keep = coeffs
        .iter()
        .rposition(|c| c.abs() > 1e-18)
        .map_or(1, |i| i + 1);
    coeffs.truncate(keep);
    Ok(MathieuSolution {
        branch: prob.branch,
        order_m: prob.order_m,
        p: prob.p,
        char_value,
        fourier_coeffs: coeffs,
        truncation_size: size,
        est_error,
    })
}

/// `Θ(θ) = ce_2m(θ/2)` or `se_2m(θ/2)`.
pub fn eval_angular(prob: &MathieuProblem, theta: f64, opts: &MathieuOptions) -> Result<f64> {
    Ok(solve(prob, opts)?.eval_theta(theta))
}

/// Small-`p` power series through `p⁶`, shared by both branches for `m ≥ 4`.
pub fn char_value_series_small(m: u32, _branch: Branch, p: f64) -> Result<f64> {
    if m < 4 {
        return Err(Error::domain(format!(
            "small-p series needs m >= 4 (got m = {m}); use the matrix method"
        )));
    }
    let m2 = f64::from(m).powi(2);
    let l = 4.0 * m2 - 1.0;
    let p2 = p * p;
    let c2 = 1.0 / (2.0 * l);
    let c4 = (20.0 * m2 + 7.0) / (32.0 * l.powi(3) * (l - 3.0));
    // 9·(2m)⁴ = 144 m⁴
    let c6 = (144.0 * m2 * m2 + 232.0 * m2 + 29.0) / (64.0 * l.powi(5) * (l - 3.0) * (l - 8.0));
    Ok(4.0 * m2 + p2 * (c2 + p2 * (c4 + p2 * c6)))
}

/// Large-`p` asymptotic series, approximating both `a_n(p)` and `b_{n+1}(p)`.
///
/// For the even orders used here, `a_2m` pairs with `n = 2m` and `b_2m` with
/// `n = 2m − 1`.
pub fn char_value_series_large(n: u32, p: f64) -> Result<f64> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::domain(format!("large-p series needs p > 0, got {p}")));
    }
    let k = 2.0 * f64::from(n) + 1.0;
    let sp = p.sqrt();
    Ok(-2.0 * p + 2.0 * k * sp
        - (k * k + 1.0) / 8.0
        - (k.powi(3) + 3.0 * k) / (128.0 * sp)
        - (5.0 * k.powi(4) + 34.0 * k * k + 9.0) / (4096.0 * p))
}
