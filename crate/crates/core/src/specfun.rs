//! Gamma function, confluent hypergeometric ₁F₁, generalized Laguerre
//! polynomials and the radial normalization constant.

use crate::error::{Error, Result};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection.
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// `Γ(x)`. Exact factorials for small positive integers.
pub fn gamma(x: f64) -> f64 {
    if x == x.floor() && (1.0..=171.0).contains(&x) {
        return (1..x as u32).fold(1.0, |acc, k| acc * f64::from(k));
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    ln_gamma(x).exp()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Kummer's function `₁F₁(a; b; z)` by direct power series.
///
/// Terminates exactly when `a` is a non-positive integer.
pub fn hyp1f1(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::domain("hyp1f1 arguments must be finite"));
    }
    if is_nonpositive_integer(b) {
        // Allowed only if the series terminates before the pole.
        if !(is_nonpositive_integer(a) && a > b) {
            return Err(Error::domain(format!("hyp1f1: b = {b} is a pole")));
        }
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..20_000u32 {
        let kf = f64::from(k);
        if a + kf == 0.0 {
            return Ok(sum);
        }
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term.abs() <= 1e-16 * sum.abs() && kf > (z.abs() - b).max(0.0) {
            return Ok(sum);
        }
        if !sum.is_finite() {
            break;
        }
    }
    Err(Error::SolverFailure {
        what: "hyp1f1 series",
        estimate: sum,
        est_error: term.abs(),
    })
}

/// Generalized Laguerre polynomial `L_n^α(x)` by the three-term recurrence.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = f64::from(k);
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Parameters of the radial factor `r^(λ−1/2) e^(−βr) ₁F₁(−n_r; 2λ; 2βr)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialSolution {
    pub beta: f64,
    pub lambda: f64,
    pub n_r: u32,
    pub norm_const: f64,
}

impl RadialSolution {
    pub fn new(beta: f64, lambda: f64, n_r: u32) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::domain(format!("beta must be positive, got {beta}")));
        }
        let norm_const = norm_constant(lambda, beta, n_r)?;
        Ok(Self {
            beta,
            lambda,
            n_r,
            norm_const,
        })
    }

    /// `N r^(λ−1/2) e^(−βr) ₁F₁(−n_r; 2λ; 2βr)`.
    pub fn eval(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let poly = terminating_1f1(self.n_r, 2.0 * self.lambda, 2.0 * self.beta * r);
        self.norm_const * r.powf(self.lambda - 0.5) * (-self.beta * r).exp() * poly
    }
}

/// `₁F₁(−n; b; z)` for `b > 0`; never fails.
pub(crate) fn terminating_1f1(n: u32, b: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = f64::from(k);
        term *= (kf - f64::from(n)) / (b + kf) * z / (kf + 1.0);
        sum += term;
    }
    sum
}

/// Normalization constant `N` of
/// `ψ = N r^(λ−1/2) e^(−βr) Θ(θ) ₁F₁(−n_r; 2λ; 2βr)` with `∫Θ² dθ = π`,
/// such that `∫∫ |ψ|² r dr dθ = 1`:
///
/// ```text
/// N² = (2β)^(2λ+1) Γ(n_r+2λ) / (2π · n_r! · Γ(2λ)² · (n_r+λ))
/// ```
///
/// Obtained from the Laguerre form of the radial factor and the
/// `∫ e^(−q) q^(k+1) [L_n^k]² dq = (n+k)!/n! · (2n+k+1)` integral, with
/// factorials of non-integer argument read as Gamma functions.
pub fn norm_constant(lambda: f64, beta: f64, n_r: u32) -> Result<f64> {
    if !(lambda > 0.5) || !lambda.is_finite() {
        return Err(Error::domain(format!(
            "lambda must exceed 1/2 for a normalizable state, got {lambda}"
        )));
    }
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::domain(format!("beta must be positive, got {beta}")));
    }
    let n = f64::from(n_r);
    let ln_n2 = (2.0 * lambda + 1.0) * (2.0 * beta).ln() + ln_gamma(n + 2.0 * lambda)
        - (2.0 * PI).ln()
        - ln_gamma(n + 1.0)
        - 2.0 * ln_gamma(2.0 * lambda)
        - (n + lambda).ln();
    Ok((0.5 * ln_n2).exp())
}
