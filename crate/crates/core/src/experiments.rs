//! Numerical check of the step-sampling transform on a rectangular window.
//!
//! A length-`N` window sampled by the even comb (`s1`) and by the step comb
//! (`s2`) is transformed directly. The step-window spectrum is then rebuilt
//! as the principal-value convolution of the continuous window transform
//! with `-i / sin(π f ΔT)` and the two are compared.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::combs::dense_spectrum;
use crate::domain::{
    bins_to_hz, denominator_magnitude, sinc, Complex, DenseSpectrum, DiscreteSignal, FrequencyGrid, SamplingKind,
    SamplingSpec, DEFAULT_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::transforms::dtft_direct;

/// Which rectangular-window table to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Experiment {
    /// Even- and step-sampled window spectra.
    WindowSpectra,
    /// Convolution rebuild of the step-window spectrum.
    Convolution,
    /// Ordinary window against the superposed `s1 + s2` window.
    Superposition,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::WindowSpectra => "fig6",
            Experiment::Convolution => "fig7",
            Experiment::Superposition => "fig8",
        }
    }
}

/// Pearson correlation the convolution rebuild must beat.
pub const CORRELATION_THRESHOLD: f64 = 0.99;

/// Relative L2 error the convolution rebuild must stay below.
pub const RELATIVE_L2_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentConfig {
    pub sample_rate: f64,
    pub window_length: usize,
    pub grid: FrequencyGrid,
    /// The window transform is integrated over `|g| <= K·f_s`.
    pub truncation_k: usize,
    /// Quadrature node spacing in Hz.
    pub quadrature_step: f64,
}

impl ExperimentConfig {
    /// Grid over the open interval `(-N/2, N/2)` bins; `grid_step` and
    /// `quadrature_step` are in bins.
    pub fn from_bins(
        sample_rate: f64,
        window_length: usize,
        grid_step: f64,
        truncation_k: usize,
        quadrature_step: f64,
    ) -> Result<Self> {
        let half = bins_to_hz(window_length as f64 / 2.0, sample_rate, window_length)?;
        let step = bins_to_hz(grid_step, sample_rate, window_length)?;
        let config = Self {
            sample_rate,
            window_length,
            grid: FrequencyGrid::open_symmetric(half, step)?,
            truncation_k,
            quadrature_step: bins_to_hz(quadrature_step, sample_rate, window_length)?,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sample_rate.is_finite() && self.sample_rate > 0.0) {
            return Err(Error::InvalidSampleRate(self.sample_rate));
        }
        if self.window_length == 0 || !self.window_length.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "window length must be even and positive, got {}",
                self.window_length
            )));
        }
        if !self.grid.is_symmetric() {
            return Err(Error::InvalidConfig("frequency grid must be symmetric about zero".into()));
        }
        if self.truncation_k == 0 {
            return Err(Error::InvalidConfig("truncation K must be at least 1".into()));
        }
        cells_per_period(self.sample_rate, self.quadrature_step)?;
        Ok(())
    }

    /// Same configuration with `K` doubled and the node spacing halved.
    pub fn refined(&self) -> Self {
        Self { truncation_k: 2 * self.truncation_k, quadrature_step: 0.5 * self.quadrature_step, ..*self }
    }
}

impl Default for ExperimentConfig {
    /// `f_s = 20 Hz`, `N = 20`, 0.1-bin grid, `K = 25`, 0.01-bin nodes.
    fn default() -> Self {
        Self::from_bins(20.0, 20, 0.1, 25, 0.01).expect("default configuration is valid")
    }
}

/// Agreement between two spectra over their jointly unmasked points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonMetrics {
    pub max_abs_diff: f64,
    /// `‖a - b‖ / ‖a‖`.
    pub relative_l2: f64,
    pub pearson_correlation: f64,
    pub points_compared: usize,
}

fn check_window(n: usize, sample_rate: f64, need_even: bool) -> Result<SamplingSpec> {
    if n == 0 {
        return Err(Error::InvalidConfig("window length must be at least 1".into()));
    }
    if need_even && !n.is_multiple_of(2) {
        return Err(Error::InvalidConfig(format!("window length must be even, got {n}")));
    }
    SamplingSpec::new(SamplingKind::Even, sample_rate)
}

/// Rectangular window on the even comb: ones at `(n + ½)ΔT`, `n = -N/2..N/2`.
pub fn build_rect_even(n: usize, sample_rate: f64) -> Result<DiscreteSignal> {
    let spec = check_window(n, sample_rate, true)?;
    let half = (n / 2) as i64;
    let positions = (-half..half).map(|k| (k as f64 + 0.5) * spec.delta_t()).collect();
    DiscreteSignal::new(positions, vec![1.0; n], spec, n)
}

/// Rectangular window on the step comb: `sign(t)` at the even-comb instants.
pub fn build_rect_step(n: usize, sample_rate: f64) -> Result<DiscreteSignal> {
    let even = build_rect_even(n, sample_rate)?;
    let spec = SamplingSpec::new(SamplingKind::Step, sample_rate)?;
    let values = even.positions().iter().map(|&t| if t < 0.0 { -1.0 } else { 1.0 }).collect();
    DiscreteSignal::new(even.positions().to_vec(), values, spec, n)
}

/// Rectangular window for the ordinary DFT: ones at `nΔT`, `n = 0..N`.
pub fn build_rect_ordinary(n: usize, sample_rate: f64) -> Result<DiscreteSignal> {
    check_window(n, sample_rate, false)?;
    let spec = SamplingSpec::new(SamplingKind::Odd, sample_rate)?;
    let positions = (0..n).map(|k| k as f64 * spec.delta_t()).collect();
    DiscreteSignal::new(positions, vec![1.0; n], spec, n)
}

/// Continuous rectangular window transform `NΔT · sinc(NπfΔT)`.
pub fn rect_window_ft(n: usize, sample_rate: f64, frequency: f64) -> Result<f64> {
    check_window(n, sample_rate, false)?;
    let width = n as f64 / sample_rate;
    Ok(width * sinc(PI * frequency * width)?)
}

/// Exact DTFT of [`build_rect_step`]: `-2i sin²(NπfΔT/2) / sin(πfΔT)`.
///
/// For even `N` the numerator has a double zero wherever the denominator
/// vanishes, so those points return the limit `0`.
pub fn closed_form_step_spectrum(n: usize, sample_rate: f64, frequency: f64) -> Result<Complex> {
    check_window(n, sample_rate, true)?;
    if !frequency.is_finite() {
        return Err(Error::NonFinite("frequency"));
    }
    let theta = PI * frequency / sample_rate;
    let s = theta.sin();
    if s.abs() < DEFAULT_TOLERANCE {
        return Ok(Complex::new(0.0, 0.0));
    }
    let half = (0.5 * n as f64 * theta).sin();
    Ok(Complex::new(0.0, -2.0 * half * half / s))
}

/// Integer number of node spacings per `f_s`; anything else would put nodes
/// asymmetrically around (or on top of) the cosecant poles.
fn cells_per_period(sample_rate: f64, quadrature_step: f64) -> Result<i64> {
    if !(quadrature_step.is_finite() && quadrature_step > 0.0) {
        return Err(Error::NodeCollision(format!("node spacing must be positive, got {quadrature_step}")));
    }
    let ratio = sample_rate / quadrature_step;
    let cells = ratio.round();
    if cells < 2.0 || (ratio - cells).abs() > 1e-9 * ratio {
        return Err(Error::NodeCollision(format!("f_s / h = {ratio} must be an integer of at least 2")));
    }
    Ok(cells as i64)
}

/// Precomputed quadrature nodes `g_m = (m + ½)h`, `m = -M..M`, `M = K·f_s/h`.
///
/// Poles of the cosecant sit at multiples of `f_s`, exactly halfway between
/// two nodes, so the midpoint sum pairs each pole symmetrically.
struct Nodes {
    offsets: Vec<f64>,
    /// `sin(Nπ g ΔT)`, `cos(Nπ g ΔT)`, `1/sin(π g ΔT)`.
    sin_n: Vec<f64>,
    cos_n: Vec<f64>,
    csc: Vec<f64>,
    step: f64,
}

impl Nodes {
    fn new(n: usize, sample_rate: f64, k: usize, h: f64) -> Result<Self> {
        let cells = cells_per_period(sample_rate, h)?;
        let half_count = k as i64 * cells;
        // g ΔT = (2m + 1) / (2·cells); reduce numerators modulo full turns.
        let turn = 4 * cells;
        let angle = |num: i64| PI * num.rem_euclid(turn) as f64 / (2 * cells) as f64;
        let len = (2 * half_count) as usize;
        let mut nodes = Nodes {
            offsets: Vec::with_capacity(len),
            sin_n: Vec::with_capacity(len),
            cos_n: Vec::with_capacity(len),
            csc: Vec::with_capacity(len),
            step: h,
        };
        for m in -half_count..half_count {
            let odd = 2 * m + 1;
            nodes.offsets.push(odd as f64 * 0.5 * h);
            let b = angle(n as i64 * odd);
            nodes.sin_n.push(b.sin());
            nodes.cos_n.push(b.cos());
            nodes.csc.push(1.0 / angle(odd).sin());
        }
        Ok(nodes)
    }

    /// `h · Σ_m W(f - g_m) · (-i / sin(π g_m ΔT))`, ascending `m`.
    fn convolve(&self, n: usize, sample_rate: f64, frequency: f64) -> Complex {
        let width = n as f64 / sample_rate;
        let a = PI * frequency * width;
        let (sin_a, cos_a) = a.sin_cos();
        let mut acc = 0.0;
        for m in 0..self.offsets.len() {
            let u = frequency - self.offsets[m];
            let window = if u.abs() < 1e-12 * self.step {
                width
            } else {
                (sin_a * self.cos_n[m] - cos_a * self.sin_n[m]) / (PI * u)
            };
            acc += window * self.csc[m];
        }
        Complex::new(0.0, -acc * self.step)
    }
}

/// Principal-value convolution of the window transform with the step
/// transform at one frequency.
pub fn pv_convolve_at(n: usize, sample_rate: f64, frequency: f64, k: usize, h: f64) -> Result<Complex> {
    check_window(n, sample_rate, true)?;
    let nodes = Nodes::new(n, sample_rate, k, h)?;
    Ok(nodes.convolve(n, sample_rate, frequency))
}

/// [`pv_convolve_at`] over a grid, evaluated in parallel. Grid points at
/// singular frequencies of the step transform are masked.
pub fn pv_convolve(n: usize, sample_rate: f64, grid: &FrequencyGrid, k: usize, h: f64) -> Result<DenseSpectrum> {
    check_window(n, sample_rate, true)?;
    if k == 0 {
        return Err(Error::InvalidConfig("truncation K must be at least 1".into()));
    }
    let nodes = Nodes::new(n, sample_rate, k, h)?;
    let step = SamplingSpec::new(SamplingKind::Step, sample_rate)?;
    let freqs: Vec<f64> = grid.points().collect();
    let values = freqs
        .par_iter()
        .map(|&f| (denominator_magnitude(f, &step) >= DEFAULT_TOLERANCE).then(|| nodes.convolve(n, sample_rate, f)))
        .collect();
    DenseSpectrum::new(*grid, values)
}

/// Agreement metrics between `a` (the reference) and `b`.
///
/// Correlation is the real part of the complex Pearson coefficient, which
/// reduces to the usual one for purely real or purely imaginary data.
pub fn compare(a: &DenseSpectrum, b: &DenseSpectrum) -> Result<ComparisonMetrics> {
    if !a.grid().matches(b.grid()) {
        return Err(Error::GridMismatch);
    }
    let pairs: Vec<(Complex, Complex)> =
        a.values().iter().zip(b.values()).filter_map(|(x, y)| Some(((*x)?, (*y)?))).collect();
    if pairs.is_empty() {
        return Err(Error::InvalidConfig("no unmasked points to compare".into()));
    }
    let count = pairs.len() as f64;
    let max_abs_diff = pairs.iter().map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    let diff_norm = pairs.iter().map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt();
    let ref_norm = pairs.iter().map(|(x, _)| x.norm_sqr()).sum::<f64>().sqrt();
    let relative_l2 = if ref_norm > 0.0 {
        diff_norm / ref_norm
    } else if diff_norm == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    let mean_a = pairs.iter().map(|p| p.0).sum::<Complex>() / count;
    let mean_b = pairs.iter().map(|p| p.1).sum::<Complex>() / count;
    let (mut cross, mut var_a, mut var_b) = (0.0, 0.0, 0.0);
    for (x, y) in &pairs {
        let (dx, dy) = (x - mean_a, y - mean_b);
        cross += (dx * dy.conj()).re;
        var_a += dx.norm_sqr();
        var_b += dy.norm_sqr();
    }
    let pearson_correlation = if var_a > 0.0 && var_b > 0.0 {
        (cross / (var_a * var_b).sqrt()).clamp(-1.0, 1.0)
    } else if max_abs_diff == 0.0 {
        1.0
    } else {
        0.0
    };
    Ok(ComparisonMetrics { max_abs_diff, relative_l2, pearson_correlation, points_compared: pairs.len() })
}

/// One named curve of an experiment table.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: &'static str,
    pub spectrum: DenseSpectrum,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentTable {
    pub experiment: Experiment,
    pub config: ExperimentConfig,
    pub series: Vec<Series>,
    /// Convolution rebuild against the direct spectrum (convolution experiment only).
    pub metrics: Option<ComparisonMetrics>,
}

impl ExperimentTable {
    pub fn series(&self, name: &str) -> Option<&DenseSpectrum> {
        self.series.iter().find(|s| s.name == name).map(|s| &s.spectrum)
    }
}

/// Builds the table for `experiment`.
///
/// * window spectra: `s1`, `s2` (direct DTFTs).
/// * convolution: `window_ft`, `step_ft`, `pv_convolution`, `s2_imag`.
/// * superposition: `s1`, `s2`, `s3` (ordinary window), `s4` (`s1 + s2`).
pub fn run_experiment(experiment: Experiment, config: &ExperimentConfig) -> Result<ExperimentTable> {
    config.validate()?;
    let (n, fs, grid) = (config.window_length, config.sample_rate, config.grid);
    let s1 = || build_rect_even(n, fs);
    let s2 = || build_rect_step(n, fs);
    let mut metrics = None;
    let series = match experiment {
        Experiment::WindowSpectra => vec![
            Series { name: "s1", spectrum: dtft_direct(&s1()?, &grid)? },
            Series { name: "s2", spectrum: dtft_direct(&s2()?, &grid)? },
        ],
        Experiment::Convolution => {
            let window = DenseSpectrum::tabulate(grid, |f| Ok(Complex::new(rect_window_ft(n, fs, f)?, 0.0)))?;
            let step_spec = SamplingSpec::new(SamplingKind::Step, fs)?;
            let step = dense_spectrum(&step_spec, &grid, DEFAULT_TOLERANCE)?;
            let pv = pv_convolve(n, fs, &grid, config.truncation_k, config.quadrature_step)?;
            let direct = dtft_direct(&s2()?, &grid)?.imaginary_part();
            metrics = Some(compare(&direct, &pv)?);
            vec![
                Series { name: "window_ft", spectrum: window },
                Series { name: "step_ft", spectrum: step },
                Series { name: "pv_convolution", spectrum: pv },
                Series { name: "s2_imag", spectrum: direct },
            ]
        }
        Experiment::Superposition => {
            let (a, b) = (s1()?, s2()?);
            let s4 = a.superpose(&b)?;
            vec![
                Series { name: "s1", spectrum: dtft_direct(&a, &grid)? },
                Series { name: "s2", spectrum: dtft_direct(&b, &grid)? },
                Series { name: "s3", spectrum: dtft_direct(&build_rect_ordinary(n, fs)?, &grid)? },
                Series { name: "s4", spectrum: dtft_direct(&s4, &grid)? },
            ]
        }
    };
    Ok(ExperimentTable { experiment, config: *config, series, metrics })
}

/// One rung of a refinement study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderStep {
    pub truncation_k: usize,
    pub quadrature_step: f64,
    pub metrics: ComparisonMetrics,
}

/// Convolution error against the direct spectrum for `rungs` successive
/// [`ExperimentConfig::refined`] configurations, starting at `config`.
pub fn convergence_ladder(config: &ExperimentConfig, rungs: usize) -> Result<Vec<LadderStep>> {
    config.validate()?;
    let (n, fs, grid) = (config.window_length, config.sample_rate, config.grid);
    let direct = dtft_direct(&build_rect_step(n, fs)?, &grid)?.imaginary_part();
    let mut current = *config;
    let mut steps = Vec::with_capacity(rungs);
    for _ in 0..rungs {
        let pv = pv_convolve(n, fs, &grid, current.truncation_k, current.quadrature_step)?;
        steps.push(LadderStep {
            truncation_k: current.truncation_k,
            quadrature_step: current.quadrature_step,
            metrics: compare(&direct, &pv)?,
        });
        current = current.refined();
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::dtft_at;

    #[test]
    fn window_builders() {
        let s = build_rect_even(2, 1.0).unwrap();
        assert_eq!(s.positions(), &[-0.5, 0.5]);
        assert_eq!(s.values(), &[1.0, 1.0]);
        let s = build_rect_even(20, 20.0).unwrap();
        assert_eq!(s.len(), 20);
        assert!(s.positions()[0] > -0.5 && *s.positions().last().unwrap() < 0.5);
        assert_eq!(s.values().iter().sum::<f64>(), 20.0);
        assert!(build_rect_even(3, 1.0).is_err());

        let s = build_rect_step(4, 1.0).unwrap();
        assert_eq!(s.values(), &[-1.0, -1.0, 1.0, 1.0]);
        assert!(build_rect_step(5, 1.0).is_err());
        assert_eq!(dtft_at(&s, 0.0), Complex::new(0.0, 0.0));

        let s4 = build_rect_even(4, 1.0).unwrap().superpose(&s).unwrap();
        assert_eq!(s4.values(), &[0.0, 0.0, 2.0, 2.0]);

        let s = build_rect_ordinary(3, 1.0).unwrap();
        assert_eq!(s.positions(), &[0.0, 1.0, 2.0]);
        assert!((dtft_at(&s, 0.0) - 3.0).norm() < 1e-15);
        let s = build_rect_ordinary(7, 5.0).unwrap();
        for f in [0.3, 1.1, -2.4] {
            let theta = PI * f / 5.0;
            let dirichlet = (7.0 * theta).sin() / theta.sin();
            assert!((dtft_at(&s, f).norm() - dirichlet.abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn window_transform() {
        assert_eq!(rect_window_ft(20, 20.0, 0.0).unwrap(), 1.0);
        assert!(rect_window_ft(20, 20.0, 1.0).unwrap().abs() < 1e-15);
        assert!((rect_window_ft(20, 20.0, 0.5).unwrap() - 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn step_closed_form() {
        assert_eq!(closed_form_step_spectrum(20, 20.0, 0.0).unwrap(), Complex::new(0.0, 0.0));
        // Direct 20-term summation: -2i Σ_{n=0}^{9} sin((2n+1)·0.05π).
        let direct: f64 = (0..10).map(|n| ((2 * n + 1) as f64 * 0.05 * PI).sin()).sum::<f64>() * -2.0;
        let value = closed_form_step_spectrum(20, 20.0, 1.0).unwrap();
        assert!((value.im - direct).abs() < 1e-12);
        assert!((value.im + 12.784906442999326).abs() < 1e-9);
        let s2 = build_rect_step(20, 20.0).unwrap();
        for f in [0.05, 0.77, 3.3, -6.1, 9.95] {
            let oracle = closed_form_step_spectrum(20, 20.0, f).unwrap();
            assert!((dtft_at(&s2, f) - oracle).norm() < 1e-10);
        }
        assert!(closed_form_step_spectrum(19, 20.0, 1.0).is_err());
    }

    #[test]
    fn pv_is_odd_and_imaginary() {
        let h = 0.05;
        let zero = pv_convolve_at(20, 20.0, 0.0, 5, h).unwrap();
        assert!(zero.norm() < 1e-9);
        let a = pv_convolve_at(20, 20.0, 2.3, 5, h).unwrap();
        let b = pv_convolve_at(20, 20.0, -2.3, 5, h).unwrap();
        assert_eq!(a.re, 0.0);
        assert!((a + b).norm() < 1e-9 * a.norm());
    }

    #[test]
    fn node_spacing_must_tile_the_period() {
        let grid = FrequencyGrid::new(-1.0, 0.5, 5).unwrap();
        assert!(matches!(pv_convolve(20, 20.0, &grid, 2, 0.03), Err(Error::NodeCollision(_))));
        assert!(matches!(pv_convolve(20, 20.0, &grid, 2, 0.0), Err(Error::NodeCollision(_))));
        assert!(pv_convolve(20, 20.0, &grid, 2, 0.04).is_ok());
        let masked = pv_convolve(20, 20.0, &grid, 2, 0.04).unwrap();
        assert_eq!(masked.mask(), vec![false, false, true, false, false]);
    }

    #[test]
    fn compare_examples() {
        let grid = FrequencyGrid::new(0.0, 1.0, 4).unwrap();
        let x = DenseSpectrum::new(
            grid,
            vec![Some(Complex::new(1.0, 0.5)), Some(Complex::new(-2.0, 0.0)), None, Some(Complex::new(0.3, -1.0))],
        )
        .unwrap();
        let same = compare(&x, &x).unwrap();
        assert_eq!(same.max_abs_diff, 0.0);
        assert_eq!(same.relative_l2, 0.0);
        assert!((same.pearson_correlation - 1.0).abs() < 1e-15);
        assert_eq!(same.points_compared, 3);

        let doubled = compare(&x, &x.map(|v| 2.0 * v)).unwrap();
        assert!((doubled.pearson_correlation - 1.0).abs() < 1e-15);
        assert!((doubled.relative_l2 - 1.0).abs() < 1e-15);

        let other = DenseSpectrum::new(FrequencyGrid::new(0.0, 2.0, 4).unwrap(), x.values().to_vec()).unwrap();
        assert_eq!(compare(&x, &other).unwrap_err(), Error::GridMismatch);
    }

    #[test]
    fn config_validation() {
        let c = ExperimentConfig::default();
        assert_eq!(c.grid.count(), 199);
        assert!((c.quadrature_step - 0.01).abs() < 1e-15);
        assert!(ExperimentConfig::from_bins(20.0, 19, 0.1, 25, 0.01).is_err());
        assert!(ExperimentConfig::from_bins(20.0, 20, 0.1, 25, 0.013).is_err());
        assert!(ExperimentConfig::from_bins(20.0, 20, 0.1, 0, 0.01).is_err());
        let asymmetric = ExperimentConfig { grid: FrequencyGrid::new(0.0, 0.1, 10).unwrap(), ..c };
        assert!(run_experiment(Experiment::WindowSpectra, &asymmetric).is_err());
        let r = c.refined();
        assert_eq!(r.truncation_k, 50);
        assert!((r.quadrature_step - 0.005).abs() < 1e-15);
    }

    #[test]
    fn superposition_table_is_linear() {
        let c = ExperimentConfig::from_bins(20.0, 20, 0.5, 5, 0.1).unwrap();
        let t = run_experiment(Experiment::Superposition, &c).unwrap();
        let sum = t.series("s1").unwrap().add(t.series("s2").unwrap()).unwrap();
        let s4 = t.series("s4").unwrap();
        for (a, b) in sum.values().iter().zip(s4.values()) {
            assert!((a.unwrap() - b.unwrap()).norm() < 1e-12);
        }
    }
}
