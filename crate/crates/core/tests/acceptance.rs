//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sampling_ft::combs::{cesaro_oracle, comb_ft_lines, dense_ft, step_ft, SeriesSpec};
use sampling_ft::experiments::{
    closed_form_step_spectrum, convergence_ladder, run_experiment, Experiment, ExperimentConfig, CORRELATION_THRESHOLD,
    RELATIVE_L2_THRESHOLD,
};
use sampling_ft::identities::{comb_doubling_report, run_identity_suite, RESIDUAL_THRESHOLD};
use sampling_ft::transforms::{dtft_at, dtft_direct, inverse, sdft_zero_padded, transform};
use sampling_ft::{Complex, DftForm, HalfCase, ReversalCase, SamplingKind, SamplingSpec};

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

/// Normalised frequency `fΔT` whose closed-form denominator is at least `margin`.
fn guarded(rng: &mut ChaCha8Rng, spec: &SamplingSpec, margin: f64) -> f64 {
    loop {
        let x: f64 = rng.gen_range(-2.0..2.0);
        let d = if spec.kind().is_reversal() { (PI * x / 2.0).cos() } else { (PI * x).sin() };
        if d.abs() >= margin {
            return x * spec.sample_rate();
        }
    }
}

fn oracle_equivalence() -> Outcome {
    const TERMS: usize = 100_000;
    const POINTS: usize = 50;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0A11);
    let kinds = HalfCase::ALL
        .iter()
        .map(|&c| SamplingKind::Half(c))
        .chain(ReversalCase::ALL.iter().map(|&c| SamplingKind::HalfReversal(c)));
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for kind in kinds {
        let spec = SamplingSpec::new(kind, 20.0).unwrap();
        let series = SeriesSpec::for_sampling(&spec).unwrap();
        for _ in 0..POINTS {
            let f = guarded(&mut rng, &spec, 0.15);
            let closed = dense_ft(&spec, f).unwrap();
            let summed = cesaro_oracle(&series, f, TERMS).unwrap();
            worst = worst.max((closed - summed).norm());
        }
        cases += 1;
    }
    let elapsed = start.elapsed();
    outcome(
        cases == 10 && worst < 1e-3 && elapsed < Duration::from_secs(10),
        format!("{cases} cases x {POINTS} freqs, max |err| = {worst:.3e} (< 1e-3), {elapsed:.2?} (< 10 s)"),
    )
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let reports = run_identity_suite(0, 1000).unwrap();
    let elapsed = start.elapsed();
    let worst = reports.iter().map(|r| r.max_abs_residual).fold(0.0, f64::max);
    let sized = reports.iter().all(|r| r.sample_count == 1000);
    outcome(
        sized && reports.len() == 12 && worst < RESIDUAL_THRESHOLD && elapsed < Duration::from_secs(1),
        format!(
            "{} identities x 1000 freqs, max residual = {worst:.3e} (< 1e-12), {elapsed:.2?} (< 1 s)",
            reports.len()
        ),
    )
}

fn comb_linearity() -> Outcome {
    let lines = |kind, fs| comb_ft_lines(&SamplingSpec::new(kind, fs).unwrap(), 16).unwrap();
    let edge = 16.0 * 20.0;
    let sum: Vec<_> = lines(SamplingKind::Odd, 20.0)
        .superpose(&lines(SamplingKind::Even, 20.0))
        .restrict(-edge, edge)
        .lines()
        .iter()
        .copied()
        .filter(|(_, w)| *w != Complex::new(0.0, 0.0))
        .collect();
    let doubled = lines(SamplingKind::Odd, 40.0).restrict(-edge, edge).lines().to_vec();
    let report = comb_doubling_report(20.0, 16).unwrap();
    outcome(
        sum == doubled && report.max_abs_residual == 0.0,
        format!(
            "Odd(20)+Even(20) vs Odd(40) on |f| <= {edge}: {} nonzero lines vs {}, bitwise equal = {}, max |diff| = {:e}",
            sum.len(),
            doubled.len(),
            sum == doubled,
            report.max_abs_residual
        ),
    )
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7217);
    let mut worst: f64 = 0.0;
    let mut runs = 0;
    for form in DftForm::ALL {
        for n in 1..=64 {
            if !form.accepts(n) {
                continue;
            }
            let x: Vec<Complex> =
                (0..n).map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let back = inverse(&transform(&x, form).unwrap());
            let err = x.iter().zip(&back).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            worst = worst.max(err);
            runs += 1;
        }
    }

    let x: Vec<f64> = (0..20).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let padded = sdft_zero_padded(&x, 10, 20.0).unwrap();
    let signal = DftForm::SymmetricCorrected.signal(&x, 20.0).unwrap();
    let direct = dtft_direct(&signal, padded.grid()).unwrap();
    let pad_err =
        padded.values().iter().zip(direct.values()).map(|(a, b)| (a.unwrap() - b.unwrap()).norm()).fold(0.0, f64::max);
    outcome(
        worst < 1e-12 && pad_err < 1e-10,
        format!("{runs} (form, N) round trips max err = {worst:.3e} (< 1e-12); zero-padded vs DTFT = {pad_err:.3e} (< 1e-10)"),
    )
}

fn window_spectra_properties() -> Outcome {
    let config = ExperimentConfig::default();
    let table = run_experiment(Experiment::WindowSpectra, &config).unwrap();
    let s1 = table.series("s1").unwrap();
    let s2 = table.series("s2").unwrap();
    let s1v: Vec<Complex> = s1.values().iter().map(|v| v.unwrap()).collect();
    let s2v: Vec<Complex> = s2.values().iter().map(|v| v.unwrap()).collect();

    let max_im2 = s2v.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    let max_re1 = s1v.iter().map(|v| v.re.abs()).fold(0.0, f64::max);
    let re_ratio = s2v.iter().map(|v| v.re.abs()).fold(0.0, f64::max) / max_im2;
    let im_ratio = s1v.iter().map(|v| v.im.abs()).fold(0.0, f64::max) / max_re1;
    let odd = (0..s2v.len()).map(|k| (s2v[k].im + s2v[s2v.len() - 1 - k].im).abs()).fold(0.0, f64::max);
    let closed = s2
        .grid()
        .points()
        .zip(&s2v)
        .map(|(f, v)| (closed_form_step_spectrum(20, 20.0, f).unwrap() - v).norm())
        .fold(0.0, f64::max);
    outcome(
        re_ratio < 1e-9 && im_ratio < 1e-9 && odd < 1e-10 && closed < 1e-10,
        format!(
            "step |Re|/max|Im| = {re_ratio:.2e}, even |Im|/max|Re| = {im_ratio:.2e} (< 1e-9); odd symmetry {odd:.2e}, closed form {closed:.2e} (< 1e-10)"
        ),
    )
}

fn convolution_reproduction() -> Outcome {
    let start = Instant::now();
    let config = ExperimentConfig::default();
    let table = run_experiment(Experiment::Convolution, &config).unwrap();
    let m = table.metrics.unwrap();
    let ladder = convergence_ladder(&config, 3).unwrap();
    let errors: Vec<f64> = ladder.iter().map(|s| s.metrics.relative_l2).collect();
    let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
    let elapsed = start.elapsed();
    outcome(
        m.pearson_correlation > CORRELATION_THRESHOLD
            && m.relative_l2 < RELATIVE_L2_THRESHOLD
            && decreasing
            && elapsed < Duration::from_secs(60),
        format!(
            "correlation = {:.6} (> 0.99), relative L2 = {:.4} (< 0.05), ladder {:?} strictly decreasing = {decreasing}, {elapsed:.2?} (< 60 s)",
            m.pearson_correlation,
            m.relative_l2,
            errors.iter().map(|e| format!("{e:.3e}")).collect::<Vec<_>>()
        ),
    )
}

fn superposition_linearity() -> Outcome {
    let table = run_experiment(Experiment::Superposition, &ExperimentConfig::default()).unwrap();
    let sum = table.series("s1").unwrap().add(table.series("s2").unwrap()).unwrap();
    let s4 = table.series("s4").unwrap();
    let worst = sum.values().iter().zip(s4.values()).map(|(a, b)| (a.unwrap() - b.unwrap()).norm()).fold(0.0, f64::max);
    outcome(worst <= 1e-12, format!("max |s4 - (s1 + s2)| = {worst:.3e} (<= 1e-12)"))
}

fn periodicity() -> Outcome {
    let fs = 20.0;
    let dt = 1.0 / fs;
    let step = SamplingSpec::new(SamplingKind::Step, fs).unwrap();
    let s2 = sampling_ft::experiments::build_rect_step(20, fs).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9E41);
    let (mut worst_step, mut worst_dtft): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let f = guarded(&mut rng, &step, 0.01);
        let shifted = f + 2.0 * fs;
        worst_step = worst_step.max((step_ft(f, dt).unwrap() - step_ft(shifted, dt).unwrap()).norm());
        worst_dtft = worst_dtft.max((dtft_at(&s2, f) - dtft_at(&s2, shifted)).norm());
    }
    outcome(
        worst_step < 1e-10 && worst_dtft < 1e-10,
        format!("100 pairs f, f+2f_s: step_ft {worst_step:.3e}, dtft(s2) {worst_dtft:.3e} (< 1e-10)"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oracle-equivalence", oracle_equivalence),
        ("identity-suite", identity_suite),
        ("comb-linearity", comb_linearity),
        ("transform-round-trips", round_trips),
        ("window-spectra-properties", window_spectra_properties),
        ("convolution-reproduction", convolution_reproduction),
        ("superposition-linearity", superposition_linearity),
        ("periodicity", periodicity),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let o = check();
        if !o.passed {
            failures += 1;
        }
        println!("[{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
