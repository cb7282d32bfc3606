use kratzer::mathieu::char_value;
use kratzer::nonrel::{bound_state_exists, critical_dr, critical_dtheta, energy};
use kratzer::rel::{self, expansion_energy, spin_energy};
use kratzer::specfun::{gamma, hyp1f1, norm_constant};
use kratzer::{Branch, MathieuOptions, MathieuProblem, PotentialParams, QuantumState, RelOptions, Settings};
use proptest::prelude::*;

fn cv(m: u32, branch: Branch, p: f64) -> f64 {
    char_value(&MathieuProblem::new(m, branch, p).unwrap(), &MathieuOptions::default()).unwrap()
}

fn branch() -> impl Strategy<Value = Branch> {
    prop_oneof![Just(Branch::Cosine), Just(Branch::Sine)]
}

fn order_and_branch() -> impl Strategy<Value = (u32, Branch)> {
    (0u32..6, branch()).prop_map(|(m, b)| if m == 0 { (0, Branch::Cosine) } else { (m, b) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn char_value_even_in_p((m, b) in order_and_branch(), p in 0.0f64..60.0) {
        let plus = cv(m, b, p);
        let minus = cv(m, b, -p);
        prop_assert!((plus - minus).abs() <= 1e-10 * plus.abs().max(1.0));
    }

    #[test]
    fn characteristic_values_interlace(m in 1u32..5, p in 0.05f64..40.0) {
        // b_2m < a_2m < b_2m+2
        let b = cv(m, Branch::Sine, p);
        let a = cv(m, Branch::Cosine, p);
        let next = cv(m + 1, Branch::Sine, p);
        prop_assert!(b < a && a < next);
        prop_assert!(cv(0, Branch::Cosine, p) < cv(1, Branch::Sine, p));
    }

    #[test]
    fn lowest_value_decreases_with_coupling(p in 0.0f64..50.0, dp in 0.01f64..5.0) {
        prop_assert!(cv(0, Branch::Cosine, p + dp) < cv(0, Branch::Cosine, p));
    }

    #[test]
    fn energy_rises_with_radial_moment(
        (m, b) in order_and_branch(), extra in 0u32..4, d_r in 0.0f64..2.0, dd in 0.01f64..1.0, d_theta in 0.0f64..0.5,
    ) {
        let s = Settings::default();
        let st = QuantumState::new(m + extra + u32::from(m == 0), m, b).unwrap();
        let lo = energy(&st, &PotentialParams::unit_charge(d_r, d_theta).unwrap(), &s);
        let hi = energy(&st, &PotentialParams::unit_charge(d_r + dd, d_theta).unwrap(), &s);
        if let (Ok(lo), Ok(hi)) = (lo, hi) {
            prop_assert!(hi.energy > lo.energy);
        }
    }

    #[test]
    fn energy_rises_with_n((m, b) in order_and_branch(), n in 1u32..6, d_r in 0.0f64..2.0, d_theta in 0.0f64..2.0) {
        let s = Settings::default();
        let n = n.max(m);
        let p = PotentialParams::unit_charge(d_r, d_theta).unwrap();
        let e1 = energy(&QuantumState::new(n, m, b).unwrap(), &p, &s);
        let e2 = energy(&QuantumState::new(n + 1, m, b).unwrap(), &p, &s);
        match (e1, e2) {
            (Ok(e1), Ok(e2)) => prop_assert!(e2.energy > e1.energy && e1.energy < 0.0),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "bound-state existence must not depend on n"),
        }
    }

    #[test]
    fn energy_defined_iff_bound((m, b) in order_and_branch(), d_r in -1.0f64..1.0, d_theta in 0.0f64..10.0) {
        let s = Settings::default();
        let st = QuantumState::new(m.max(1), m, b).unwrap();
        let p = PotentialParams::unit_charge(d_r, d_theta).unwrap();
        prop_assert_eq!(bound_state_exists(&st, &p, &s).unwrap(), energy(&st, &p, &s).is_ok());
    }

    #[test]
    fn energy_scales_with_charge_squared(z in 0.1f64..5.0, d_r in 0.0f64..1.0, d_theta in 0.0f64..1.0) {
        let s = Settings::default();
        let st = QuantumState::new(2, 1, Branch::Cosine).unwrap();
        let e1 = energy(&st, &PotentialParams::unit_charge(d_r, d_theta).unwrap(), &s).unwrap().energy;
        let ez = energy(&st, &PotentialParams::new(z, d_r, d_theta).unwrap(), &s).unwrap().energy;
        prop_assert!((ez - z * z * e1).abs() <= 1e-12 * ez.abs());
    }

    #[test]
    fn critical_moments_round_trip((m, b) in order_and_branch(), d_r in 0.0f64..1.0) {
        let s = Settings::default();
        if let Some(dt) = critical_dtheta(m, b, d_r, &s).unwrap() {
            prop_assert!((critical_dr(m, b, dt, &s).unwrap() - d_r).abs() < 1e-7);
        }
    }

    #[test]
    fn critical_moment_grows_with_radial_moment(m in 0u32..4, d_r in 0.0f64..0.8, dd in 0.05f64..0.5) {
        let s = Settings::default();
        let a = rel::critical_dtheta_limit(m, Branch::Cosine, d_r, &s).unwrap().unwrap();
        let b = rel::critical_dtheta_limit(m, Branch::Cosine, d_r + dd, &s).unwrap().unwrap();
        prop_assert!(b > a);
        let next = rel::critical_dtheta_limit(m + 1, Branch::Cosine, d_r, &s).unwrap().unwrap();
        prop_assert!(next > a);
    }

    #[test]
    fn spin_roots_are_in_domain(n in 1u32..4, d_r in 0.0f64..0.6, d_theta in 0.0f64..2.5) {
        let s = Settings::default();
        let o = RelOptions::default();
        let st = QuantumState::new(n, 1, Branch::Cosine).unwrap();
        let p = PotentialParams::unit_charge(d_r, d_theta).unwrap();
        let r = spin_energy(&st, &p, &o, &s).unwrap();
        prop_assert!(r.energy < 0.0 && r.energy > -2.0 / (o.alpha * o.alpha));
        prop_assert!(r.residual <= 1e-10);
        let e = expansion_energy(&st, &p, &o, &s).unwrap();
        prop_assert!((r.energy - e.energy).abs() <= 1e-4);
    }

    #[test]
    fn kummer_transformation(a in -3.0f64..3.0, b in 0.5f64..6.0, z in -4.0f64..4.0) {
        let lhs = hyp1f1(a, b, z).unwrap();
        let rhs = z.exp() * hyp1f1(b - a, b, -z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(1.0));
    }

    #[test]
    fn gamma_recurrence(x in 0.1f64..30.0) {
        let g = gamma(x);
        prop_assert!((gamma(x + 1.0) - x * g).abs() <= 1e-13 * (x * g).abs());
    }

    #[test]
    fn norm_constant_beta_scaling(lambda in 0.6f64..4.0, beta in 0.05f64..3.0, k in 0.1f64..4.0, n_r in 0u32..5) {
        let ratio = norm_constant(lambda, k * beta, n_r).unwrap() / norm_constant(lambda, beta, n_r).unwrap();
        prop_assert!((ratio - k.powf(lambda + 0.5)).abs() <= 1e-12 * ratio);
    }
}

#[test]
fn mathieu_limit_at_zero() {
    for m in 0..=6u32 {
        let expected = f64::from(4 * m * m);
        assert!((cv(m, Branch::Cosine, 0.0) - expected).abs() < 1e-10);
        if m > 0 {
            assert!((cv(m, Branch::Sine, 0.0) - expected).abs() < 1e-10);
        }
    }
}

#[test]
fn evenness_on_random_grid() {
    use proptest::prelude::RngCore;
    use proptest::test_runner::{RngAlgorithm, TestRng};
    let mut rng = TestRng::deterministic_rng(RngAlgorithm::ChaCha);
    for _ in 0..50 {
        let m = rng.next_u32() % 7;
        let b = if m == 0 || rng.next_u32().is_multiple_of(2) { Branch::Cosine } else { Branch::Sine };
        let p = 100.0 * (rng.next_u32() as f64 / u32::MAX as f64);
        assert!((cv(m, b, p) - cv(m, b, -p)).abs() <= 1e-10 * cv(m, b, p).abs().max(1.0));
    }
}

#[test]
fn sine_branch_requires_positive_order() {
    assert!(MathieuProblem::new(0, Branch::Sine, 1.0).is_err());
    assert!(QuantumState::new(1, 0, Branch::Sine).is_err());
}
