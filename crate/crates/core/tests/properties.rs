//! Cross-module properties of the closed forms, checked against independent
//! evaluations written here.

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use proptest::prelude::*;

use sampling_ft::combs::{comb_ft_lines, half_ft, step_ft};
use sampling_ft::experiments::{build_rect_step, closed_form_step_spectrum};
use sampling_ft::transforms::{dtft_at, dtft_direct, sdft_zero_padded};
use sampling_ft::{DftForm, FrequencyGrid, HalfCase, SamplingKind, SamplingSpec};

/// `fΔT` in (-2, 2) with `|sin(πfΔT)| >= margin`.
fn guarded_x(margin: f64) -> impl Strategy<Value = f64> {
    (-2.0f64..2.0).prop_filter("near a pole", move |x| (PI * x).sin().abs() >= margin)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn translation_relations(x in guarded_x(0.01), fs in 1.0f64..1000.0) {
        let dt = 1.0 / fs;
        let f = x / dt;
        let fwd = C::cis(PI * f * dt);
        let h = |k| half_ft(HalfCase::new(k).unwrap(), f, dt).unwrap();
        prop_assert!((h(1) - fwd * h(6)).norm() < 1e-12);
        prop_assert!((h(2) - fwd.conj() * h(6)).norm() < 1e-12);
        prop_assert!((h(3) - fwd * h(5)).norm() < 1e-12);
        prop_assert!((h(4) - fwd.conj() * h(5)).norm() < 1e-12);
    }

    #[test]
    fn delta_pairs(x in guarded_x(0.01)) {
        let dt = 0.05;
        let f = x / dt;
        let h = |k| half_ft(HalfCase::new(k).unwrap(), f, dt).unwrap();
        prop_assert!((h(1) - h(2) - 1.0).norm() < 1e-12);
        prop_assert!((h(4) - h(3) - 1.0).norm() < 1e-12);
    }

    #[test]
    fn step_is_imaginary_and_periodic(x in guarded_x(0.01)) {
        let (fs, dt) = (20.0, 0.05);
        // On a 2^-40 lattice so that f + 2f_s carries no rounding of its own.
        let f = (x * fs * 2f64.powi(40)).round() / 2f64.powi(40);
        let s = step_ft(f, dt).unwrap();
        prop_assert_eq!(s.re, 0.0);
        prop_assert!((s - step_ft(f + 2.0 * fs, dt).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn comb_doubling_at_any_rate(fs in 0.5f64..5000.0) {
        let lines = |kind, rate| comb_ft_lines(&SamplingSpec::new(kind, rate).unwrap(), 16).unwrap();
        let edge = 16.0 * fs;
        let sum: Vec<_> = lines(SamplingKind::Odd, fs)
            .superpose(&lines(SamplingKind::Even, fs))
            .restrict(-edge, edge)
            .lines()
            .iter()
            .copied()
            .filter(|(_, w)| w.norm() != 0.0)
            .collect();
        prop_assert_eq!(sum, lines(SamplingKind::Odd, 2.0 * fs).restrict(-edge, edge).lines().to_vec());
    }

    #[test]
    fn zero_padding_is_the_dtft(n in 1usize..=32, factor in 1usize..=8, seed in any::<u64>()) {
        let mut state = seed;
        let x: Vec<f64> = (0..n)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            })
            .collect();
        let padded = sdft_zero_padded(&x, factor, 8.0).unwrap();
        let signal = DftForm::SymmetricCorrected.signal(&x, 8.0).unwrap();
        for (f, v) in padded.iter_unmasked() {
            // Independent sum with exact half-integer instants.
            let direct: C = x
                .iter()
                .enumerate()
                .map(|(k, &v)| v * C::cis(-2.0 * PI * f * (k as f64 - (n as f64 - 1.0) / 2.0) / 8.0))
                .sum();
            prop_assert!((v - direct).norm() < 1e-10);
            prop_assert!((v - dtft_at(&signal, f)).norm() < 1e-10);
        }
    }
}

#[test]
fn step_window_oracle_chain() {
    let (n, fs) = (20, 20.0);
    let s2 = build_rect_step(n, fs).unwrap();
    let padded = sdft_zero_padded(s2.values(), 10, fs).unwrap();
    let direct = dtft_direct(&s2, padded.grid()).unwrap();
    for ((f, p), d) in padded.iter_unmasked().zip(direct.values()) {
        let d = d.unwrap();
        let closed = closed_form_step_spectrum(n, fs, f).unwrap();
        assert!((p - d).norm() < 1e-10, "padded vs direct at {f}");
        assert!((closed - d).norm() < 1e-10, "closed form vs direct at {f}");
    }
}

#[test]
fn step_window_is_odd_on_default_grid() {
    let grid = FrequencyGrid::open_symmetric(10.0, 0.1).unwrap();
    let s2 = dtft_direct(&build_rect_step(20, 20.0).unwrap(), &grid).unwrap();
    let v: Vec<C> = s2.values().iter().map(|x| x.unwrap()).collect();
    for k in 0..v.len() {
        assert!((v[k].im + v[v.len() - 1 - k].im).abs() < 1e-10);
    }
}
