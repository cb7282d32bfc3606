//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection, with
//! eigenvectors from inverse iteration.

#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    /// `off` holds the sub/super-diagonal and must be one shorter than `diag`.
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "empty matrix");
        assert_eq!(off.len() + 1, diag.len(), "off-diagonal length mismatch");
        Self { diag, off }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    fn pivmin(&self) -> f64 {
        let emax = self.off.iter().fold(1.0_f64, |acc, e| acc.max(e * e));
        f64::MIN_POSITIVE * emax
    }

    /// Number of eigenvalues strictly less than `x`.
    ///
    /// Counts negative pivots of the LDLᵀ factorization of `T − xI`. Depends on
    /// the off-diagonal only through its squares.
    pub fn count_below(&self, x: f64) -> usize {
        self.count_below_with(x, self.pivmin())
    }

    fn count_below_with(&self, x: f64, pivmin: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for (d, e) in self.diag[1..].iter().zip(&self.off) {
            q = d - x - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval enclosing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            let r = left + right;
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based), bisected to machine precision.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.len(), "eigenvalue index {k} out of range");
        let (g_lo, g_hi) = self.gershgorin();
        let spread = (g_hi - g_lo).max(1.0);
        let pivmin = self.pivmin();
        self.bisect(k, g_lo - f64::EPSILON * spread - pivmin, g_hi + f64::EPSILON * spread + pivmin, pivmin)
    }

    /// The `k`-th eigenvalue given an upper bound `hi` for it, e.g. the same
    /// eigenvalue of a leading principal submatrix (Cauchy interlacing).
    /// `guess_width` is the expected distance below `hi`; the bracket widens
    /// geometrically if that is too small.
    pub fn eigenvalue_below(&self, k: usize, hi: f64, guess_width: f64) -> f64 {
        assert!(k < self.len(), "eigenvalue index {k} out of range");
        let pivmin = self.pivmin();
        let (g_lo, _) = self.gershgorin();
        let pad = 4.0 * f64::EPSILON * hi.abs().max(1.0) + pivmin;
        let hi = hi + pad;
        if self.count_below_with(hi, pivmin) <= k {
            return self.eigenvalue(k);
        }
        let mut width = guess_width.max(pad);
        let lo = loop {
            let lo = hi - width;
            if lo <= g_lo {
                break g_lo - pad;
            }
            if self.count_below_with(lo, pivmin) <= k {
                break lo;
            }
            width *= 1e3;
        };
        self.bisect(k, lo, hi, pivmin)
    }

    fn bisect(&self, k: usize, mut lo: f64, mut hi: f64, pivmin: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) + pivmin {
                break;
            }
            if self.count_below_with(mid, pivmin) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if lo <= 0.0 && hi >= 0.0 {
            0.0
        } else {
            0.5 * (lo + hi)
        }
    }

    /// Unit eigenvector for a (converged) eigenvalue, by inverse iteration.
    ///
    /// The sign is left as produced; callers fix the phase.
    pub fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        if n == 1 {
            return vec![1.0];
        }
        let scale = {
            let (lo, hi) = self.gershgorin();
            lo.abs().max(hi.abs()).max(1.0)
        };
        let lu = ShiftedLu::factor(self, lambda, scale);
        // Deterministic start vector that is not orthogonal to any
        // eigenvector in practice.
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * (i as f64).sin()).collect();
        normalize(&mut v);
        for _ in 0..4 {
            lu.solve(&mut v);
            if !normalize(&mut v) {
                break;
            }
        }
        v
    }
}

fn normalize(v: &mut [f64]) -> bool {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if !norm.is_finite() || norm == 0.0 {
        return false;
    }
    v.iter_mut().for_each(|x| *x /= norm);
    true
}

/// LU factorization with partial pivoting of `T − σI` (LAPACK `dgttrf` layout).
struct ShiftedLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(t: &SymTridiagonal, sigma: f64, scale: f64) -> Self {
        let n = t.len();
        let mut dl = t.off.clone();
        let mut du = t.off.clone();
        let mut d: Vec<f64> = t.diag.iter().map(|x| x - sigma).collect();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n - 1 {
            if d[i].abs() >= dl[i].abs() {
                if d[i] != 0.0 {
                    let fact = dl[i] / d[i];
                    dl[i] = fact;
                    d[i + 1] -= fact * du[i];
                }
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        // Singular pivots are expected at an exact eigenvalue.
        let tiny = f64::EPSILON * scale;
        for x in d.iter_mut() {
            if x.abs() < tiny {
                *x = if *x < 0.0 { -tiny } else { tiny };
            }
        }
        Self {
            dl,
            d,
            du,
            du2,
            swapped,
        }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}
