//! Bracketing and bisection for scalar equations.

use crate::error::{Error, Result};

/// A root with the bracket it was isolated in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub bracket: (f64, f64),
    pub iterations: u32,
}

/// Bisect `f` on `[a, b]`, which must bracket a sign change.
///
/// Stops when the bracket is narrower than `rel_tol·max(|a|,|b|) + abs_tol`
/// or cannot be split further, and returns the endpoint with the smaller
/// residual.
pub fn bisect<F>(mut f: F, a: f64, b: f64, rel_tol: f64, abs_tol: f64) -> Result<Root>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut flo = f(lo)?;
    let mut fhi = f(hi)?;
    if flo == 0.0 {
        return Ok(Root { x: lo, fx: 0.0, bracket: (lo, lo), iterations: 0 });
    }
    if fhi == 0.0 {
        return Ok(Root { x: hi, fx: 0.0, bracket: (hi, hi), iterations: 0 });
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::domain(format!(
            "no sign change on [{lo}, {hi}] (f = {flo}, {fhi})"
        )));
    }
    let mut iterations = 0;
    while iterations < 400 {
        let width = hi - lo;
        if width <= rel_tol * lo.abs().max(hi.abs()) + abs_tol {
            break;
        }
        let mid = lo + 0.5 * width;
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = f(mid)?;
        iterations += 1;
        if fmid == 0.0 {
            return Ok(Root { x: mid, fx: 0.0, bracket: (lo, hi), iterations });
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    let (x, fx) = if flo.abs() <= fhi.abs() { (lo, flo) } else { (hi, fhi) };
    Ok(Root { x, fx, bracket: (lo, hi), iterations })
}

/// Sign changes of `f` between consecutive grid points.
pub fn sign_changes<F>(mut f: F, grid: &[f64]) -> Result<Vec<(f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &x in grid {
        let fx = f(x)?;
        if let Some((px, pf)) = prev {
            if pf.is_finite() && fx.is_finite() && (pf == 0.0 || pf.signum() != fx.signum()) {
                out.push((px, x));
            }
        }
        prev = Some((x, fx));
    }
    Ok(out)
}

/// `count` points geometrically spaced in magnitude between `-near` and
/// `-far` (both positive), ordered from `-near` outward.
pub fn geometric_negative_grid(near: f64, far: f64, count: usize) -> Vec<f64> {
    assert!(near > 0.0 && far > near && count >= 2);
    let ratio = (far / near).ln() / (count - 1) as f64;
    (0..count)
        .map(|i| -(near * (ratio * i as f64).exp()))
        .collect()
}
