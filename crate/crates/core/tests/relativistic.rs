use kratzer::mathieu::char_value;
use kratzer::nonrel::{self, energy};
use kratzer::rel::{
    critical_dtheta_limit, critical_dtheta_rel, expansion_energy, pseudospin_energy, rel_wavefunction_params,
    spin_energy, FINE_STRUCTURE,
};
use kratzer::{Branch, MathieuOptions, MathieuProblem, PotentialParams, QuantumState, RelOptions, Settings, SymmetryMode};

fn st(n: u32, m: u32) -> QuantumState {
    QuantumState::new(n, m, Branch::Cosine).unwrap()
}

fn pp(d_r: f64, d_theta: f64) -> PotentialParams {
    PotentialParams::unit_charge(d_r, d_theta).unwrap()
}

fn spin(n: u32, m: u32, d_r: f64, d_theta: f64) -> f64 {
    spin_energy(&st(n, m), &pp(d_r, d_theta), &RelOptions::default(), &Settings::default())
        .unwrap()
        .energy
}

/// Index of the largest sample, required to be strictly inside the grid.
fn interior_max(values: &[f64]) -> usize {
    let (i, _) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .unwrap();
    assert!(i > 0 && i + 1 < values.len(), "maximum at the edge: {values:?}");
    assert!(values[..=i].windows(2).all(|w| w[1] >= w[0]));
    assert!(values[i..].windows(2).all(|w| w[1] <= w[0]));
    i
}

#[test]
fn spin_energy_rises_then_falls_with_dtheta() {
    for n in 1..=3 {
        let crit = critical_dtheta_limit(1, Branch::Cosine, 0.3, &Settings::default()).unwrap().unwrap();
        let grid: Vec<f64> = (0..30).map(|i| crit * 0.97 * f64::from(i) / 29.0).collect();
        let values: Vec<f64> = grid.iter().map(|&d| spin(n, 1, 0.3, d)).collect();
        interior_max(&values);
    }
}

#[test]
fn schrodinger_energy_rises_then_falls_with_dtheta() {
    let s = Settings::default();
    let crit = nonrel::critical_dtheta(1, Branch::Cosine, 0.5, &s).unwrap().unwrap();
    let values: Vec<f64> = (0..30)
        .map(|i| {
            let d = crit * 0.97 * f64::from(i) / 29.0;
            energy(&st(2, 1), &pp(0.5, d), &s).unwrap().energy
        })
        .collect();
    interior_max(&values);
}

#[test]
fn spin_energy_rises_with_radial_moment() {
    for d_theta in [0.0, 0.5, 1.5, 2.5] {
        let values: Vec<f64> = [0.0, 0.15, 0.3, 0.45, 0.6].iter().map(|&d_r| spin(2, 1, d_r, d_theta)).collect();
        assert!(values.windows(2).all(|w| w[1] > w[0]), "D_θ = {d_theta}: {values:?}");
    }
}

#[test]
fn spin_matches_exact_solution_without_dipoles() {
    // D_r = D_θ = 0: g = n_r + 1/2 + m, so E = −2Z²/(g² + Z²α²)
    let s = Settings::default();
    for alpha in [FINE_STRUCTURE, 0.05] {
        let o = RelOptions::with_alpha(alpha);
        for (n, m, z) in [(1u32, 1u32, 1.0), (3, 1, 1.0), (2, 2, 2.5), (4, 0, 1.0)] {
            let p = PotentialParams::new(z, 0.0, 0.0).unwrap();
            let got = spin_energy(&st(n, m), &p, &o, &s).unwrap().energy;
            let g = f64::from(n - m) + 0.5 + f64::from(m);
            let exact = -2.0 * z * z / (g * g + z * z * alpha * alpha);
            assert!((got - exact).abs() <= 1e-12 * exact.abs(), "n={n} m={m}: {got} vs {exact}");
        }
    }
}

#[test]
fn vanishing_alpha_reduces_to_leading_term() {
    let s = Settings::default();
    let small = RelOptions::with_alpha(1e-4);
    for (n, m, d_r, d_theta) in [(1, 1, 0.3, 0.5), (2, 1, 0.3, 1.5), (3, 1, 0.6, 2.0), (1, 0, 0.4, 0.2)] {
        let root = spin_energy(&st(n, m), &pp(d_r, d_theta), &small, &s).unwrap().energy;
        let lead = expansion_energy(&st(n, m), &pp(d_r, d_theta), &RelOptions::with_alpha(0.0), &s)
            .unwrap()
            .energy;
        assert!((root - lead).abs() <= 1e-8, "n={n} m={m}: {root} vs {lead}");
    }
}

#[test]
fn expansion_tracks_root_closely() {
    let s = Settings::default();
    let o = RelOptions::default();
    let root = spin_energy(&st(2, 1), &pp(0.3, 0.5), &o, &s).unwrap().energy;
    let exp = expansion_energy(&st(2, 1), &pp(0.3, 0.5), &o, &s).unwrap().energy;
    assert!((root - exp).abs() <= 1e-5);
}

#[test]
fn wavefunction_parameters_are_consistent_with_root() {
    let s = Settings::default();
    let o = RelOptions::default();
    for (n, m, d_r, d_theta) in [(1, 1, 0.3, 0.5), (3, 1, 0.3, 2.5), (2, 0, 0.6, 0.3)] {
        let state = st(n, m);
        let params = pp(d_r, d_theta);
        let e = spin_energy(&state, &params, &o, &s).unwrap().energy;
        let rad = rel_wavefunction_params(&state, &params, o.alpha, e, &s).unwrap();
        assert!(rad.beta > 0.0 && rad.lambda > 0.5);
        // termination of ₁F₁ at the root: Z x / β = n_r + λ
        let x = 2.0 + e * o.alpha * o.alpha;
        assert!((x / rad.beta - (f64::from(state.n_r()) + rad.lambda)).abs() < 1e-8);
    }
}

#[test]
fn wavefunction_parameters_approach_doubled_couplings() {
    let s = Settings::default();
    let o = RelOptions::with_alpha(1e-5);
    let (state, params) = (st(2, 1), pp(0.3, 0.8));
    let e = spin_energy(&state, &params, &o, &s).unwrap().energy;
    let rad = rel_wavefunction_params(&state, &params, o.alpha, e, &s).unwrap();
    let c = char_value(&MathieuProblem::new(1, Branch::Cosine, 8.0 * 0.8).unwrap(), &MathieuOptions::default()).unwrap();
    let lambda = 0.5 + (0.25 * c + 4.0 * 0.3).sqrt();
    assert!((rad.lambda - lambda).abs() < 1e-8);
    assert!((rad.beta - 2.0 / (f64::from(state.n_r()) + lambda)).abs() < 1e-8);
}

#[test]
fn relativistic_critical_moment() {
    let s = Settings::default();
    let o = RelOptions::default();
    let c1 = critical_dtheta_rel(&st(1, 1), 0.0, 1.0, SymmetryMode::Spin, &o, &s).unwrap().unwrap();
    let c3 = critical_dtheta_rel(&st(3, 1), 0.0, 1.0, SymmetryMode::Spin, &o, &s).unwrap().unwrap();
    let limit = critical_dtheta_limit(1, Branch::Cosine, 0.0, &s).unwrap().unwrap();
    assert!((c1 - 2.662).abs() < 2e-3, "{c1}");
    assert!(c1 != c3);
    let a2 = o.alpha * o.alpha;
    assert!((c1 - c3).abs() / c1 < 10.0 * a2);
    assert!((c1 - limit).abs() / limit < 10.0 * a2);
    // past the critical moment the solver reports no bound state
    assert!(spin_energy(&st(1, 1), &pp(0.0, c1 + 1e-3), &o, &s).is_err());
    assert!(spin_energy(&st(1, 1), &pp(0.0, c1 - 1e-3), &o, &s).is_ok());
}

#[test]
fn pseudospin_root_for_large_radial_moment() {
    let s = Settings::default();
    let r = pseudospin_energy(&st(1, 1), &pp(150.0, 0.0), &RelOptions::default(), &s)
        .unwrap()
        .unwrap();
    assert!(r.energy > -200.0 && r.energy < 0.0);
    assert!(r.residual <= 1e-10);
}
