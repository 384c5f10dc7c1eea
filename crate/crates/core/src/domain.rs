//! Shared domain types: sampling functions, frequency grids, line and dense
//! spectra, discrete signals, plus the small numeric helpers every other
//! module leans on.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// Complex amplitude used for every spectrum value.
pub type Complex = num_complex::Complex64;

/// Default threshold on a closed-form denominator below which a frequency is
/// treated as singular.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Builds a [`Complex`], rejecting NaN and infinite components.
pub fn checked_complex(re: f64, im: f64) -> Result<Complex> {
    if !re.is_finite() {
        return Err(Error::NonFinite("real part"));
    }
    if !im.is_finite() {
        return Err(Error::NonFinite("imaginary part"));
    }
    Ok(Complex::new(re, im))
}

/// Unnormalized sinc, `sin(x)/x`, with the removable singularity filled in.
///
/// Callers fold any factor of π into the argument themselves.
pub fn sinc(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::NonFinite("sinc argument"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok(x.sin() / x)
}

fn check_bin_params(sample_rate: f64, n: usize) -> Result<()> {
    if !(sample_rate.is_finite() && sample_rate > 0.0) {
        return Err(Error::InvalidSampleRate(sample_rate));
    }
    if n == 0 {
        return Err(Error::InvalidConfig("window length must be at least 1".into()));
    }
    Ok(())
}

/// Converts a frequency in bins (units of `f_s / N`) to Hz.
pub fn bins_to_hz(bins: f64, sample_rate: f64, n: usize) -> Result<f64> {
    check_bin_params(sample_rate, n)?;
    Ok(bins * sample_rate / n as f64)
}

/// Inverse of [`bins_to_hz`].
pub fn hz_to_bins(hz: f64, sample_rate: f64, n: usize) -> Result<f64> {
    check_bin_params(sample_rate, n)?;
    Ok(hz * n as f64 / sample_rate)
}

/// One of the six half-infinite sampling functions.
///
/// | case | support                         |
/// |------|---------------------------------|
/// | 1    | `n ΔT`, `n = 0, 1, 2, …`        |
/// | 2    | `n ΔT`, `n = 1, 2, …`           |
/// | 3    | `n ΔT`, `n = -1, -2, …`         |
/// | 4    | `n ΔT`, `n = 0, -1, -2, …`      |
/// | 5    | `(n - ½) ΔT`, `n = 0, -1, …`    |
/// | 6    | `(n + ½) ΔT`, `n = 0, 1, …`     |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfCase {
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
}

impl HalfCase {
    pub const ALL: [HalfCase; 6] =
        [HalfCase::Case1, HalfCase::Case2, HalfCase::Case3, HalfCase::Case4, HalfCase::Case5, HalfCase::Case6];

    pub fn new(case: u8) -> Result<Self> {
        match case {
            1 => Ok(HalfCase::Case1),
            2 => Ok(HalfCase::Case2),
            3 => Ok(HalfCase::Case3),
            4 => Ok(HalfCase::Case4),
            5 => Ok(HalfCase::Case5),
            6 => Ok(HalfCase::Case6),
            _ => Err(Error::InvalidCase { family: "half-infinite", case }),
        }
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

/// One of the four half-infinite reversal samplings (alternating signs at
/// spacing `ΔT/2`).
///
/// | case | support (`n = 0, 1, 2, …`, sign `(-1)^n`) |
/// |------|-------------------------------------------|
/// | 1    | `n ΔT/2`                                  |
/// | 2    | `(n + 1) ΔT/2`                            |
/// | 3    | `(n + ½) ΔT/2`                            |
/// | 4    | `-(n + ½) ΔT/2`                           |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReversalCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl ReversalCase {
    pub const ALL: [ReversalCase; 4] =
        [ReversalCase::Case1, ReversalCase::Case2, ReversalCase::Case3, ReversalCase::Case4];

    pub fn new(case: u8) -> Result<Self> {
        match case {
            1 => Ok(ReversalCase::Case1),
            2 => Ok(ReversalCase::Case2),
            3 => Ok(ReversalCase::Case3),
            4 => Ok(ReversalCase::Case4),
            _ => Err(Error::InvalidCase { family: "half-infinite reversal", case }),
        }
    }

    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

/// The family a sampling function belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SamplingKind {
    /// Conventional comb at integer multiples of `ΔT`.
    Odd,
    /// Comb shifted by `r·ΔT`.
    Shifted(f64),
    /// Comb at half-integer multiples of `ΔT` (`r = 0.5`).
    Even,
    /// `r = 0.25`.
    QuarterForward,
    /// `r = -0.25`.
    QuarterBackward,
    /// Alternating comb at multiples of `ΔT/2`.
    OddReversal,
    /// Alternating comb at `(n+1)ΔT/2`.
    EvenReversal,
    Half(HalfCase),
    HalfReversal(ReversalCase),
    /// Even comb weighted by `sign(t)`.
    Step,
}

impl SamplingKind {
    /// Shift `r` (in units of `ΔT`) for the shifted-comb family.
    pub fn shift(&self) -> Option<f64> {
        match *self {
            SamplingKind::Odd => Some(0.0),
            SamplingKind::Shifted(r) => Some(r),
            SamplingKind::Even => Some(0.5),
            SamplingKind::QuarterForward => Some(0.25),
            SamplingKind::QuarterBackward => Some(-0.25),
            _ => None,
        }
    }

    /// Maps `Shifted(r)` onto the named kinds when `r` is `0`, `±0.25` or `0.5`.
    pub fn canonical(self) -> Self {
        match self {
            SamplingKind::Shifted(0.0) => SamplingKind::Odd,
            SamplingKind::Shifted(0.5) => SamplingKind::Even,
            SamplingKind::Shifted(0.25) => SamplingKind::QuarterForward,
            SamplingKind::Shifted(-0.25) => SamplingKind::QuarterBackward,
            other => other,
        }
    }

    /// True for the two-sided combs whose transform is a line spectrum.
    pub fn is_infinite_comb(&self) -> bool {
        matches!(
            self,
            SamplingKind::Odd
                | SamplingKind::Shifted(_)
                | SamplingKind::Even
                | SamplingKind::QuarterForward
                | SamplingKind::QuarterBackward
                | SamplingKind::OddReversal
                | SamplingKind::EvenReversal
        )
    }

    /// Reversal kinds sample at `ΔT/2`; everything else at `ΔT`.
    pub fn is_reversal(&self) -> bool {
        matches!(self, SamplingKind::OddReversal | SamplingKind::EvenReversal | SamplingKind::HalfReversal(_))
    }
}

impl fmt::Display for SamplingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplingKind::Odd => write!(f, "odd"),
            SamplingKind::Shifted(r) => write!(f, "shifted({r})"),
            SamplingKind::Even => write!(f, "even"),
            SamplingKind::QuarterForward => write!(f, "quarter-forward"),
            SamplingKind::QuarterBackward => write!(f, "quarter-backward"),
            SamplingKind::OddReversal => write!(f, "odd-reversal"),
            SamplingKind::EvenReversal => write!(f, "even-reversal"),
            SamplingKind::Half(c) => write!(f, "half-{}", c.number()),
            SamplingKind::HalfReversal(c) => write!(f, "half-reversal-{}", c.number()),
            SamplingKind::Step => write!(f, "step"),
        }
    }
}

/// A sampling function: its kind plus the sample rate. `ΔT` is always derived.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplingSpec {
    kind: SamplingKind,
    sample_rate: f64,
}

impl SamplingSpec {
    pub fn new(kind: SamplingKind, sample_rate: f64) -> Result<Self> {
        if !(sample_rate.is_finite() && sample_rate > 0.0) {
            return Err(Error::InvalidSampleRate(sample_rate));
        }
        if let SamplingKind::Shifted(r) = kind {
            if !r.is_finite() {
                return Err(Error::NonFinite("shift"));
            }
        }
        Ok(Self { kind, sample_rate })
    }

    pub fn kind(&self) -> SamplingKind {
        self.kind
    }

    pub fn sample_rate(&self) -> f64 {
        self.sample_rate
    }

    pub fn delta_t(&self) -> f64 {
        1.0 / self.sample_rate
    }

    /// Distance between adjacent deltas.
    pub fn spacing(&self) -> f64 {
        if self.kind.is_reversal() {
            0.5 * self.delta_t()
        } else {
            self.delta_t()
        }
    }

    pub fn with_sample_rate(&self, sample_rate: f64) -> Result<Self> {
        Self::new(self.kind, sample_rate)
    }
}

/// Magnitude of the denominator that vanishes at the singular frequencies of
/// `spec`'s transform.
///
/// Half-infinite, step and shifted kinds blow up where `sin(π f ΔT) = 0`; the
/// reversal kinds where `cos(π f ΔT / 2) = 0`.
pub fn denominator_magnitude(frequency: f64, spec: &SamplingSpec) -> f64 {
    let theta = PI * frequency * spec.delta_t();
    if spec.kind().is_reversal() {
        (0.5 * theta).cos().abs()
    } else {
        theta.sin().abs()
    }
}

/// True when `frequency` is too close to a singular point of the closed form
/// for `spec` to be evaluated.
pub fn singularity_guard(frequency: f64, spec: &SamplingSpec, tol: f64) -> bool {
    !frequency.is_finite() || denominator_magnitude(frequency, spec) < tol
}

/// Uniform frequency grid `start + k·step`, `k = 0..count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyGrid {
    start: f64,
    step: f64,
    count: usize,
}

impl FrequencyGrid {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if !start.is_finite() || !step.is_finite() {
            return Err(Error::InvalidGrid("start and step must be finite".into()));
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        if count == 0 {
            return Err(Error::InvalidGrid("grid must have at least one point".into()));
        }
        Ok(Self { start, step, count })
    }

    /// Grid covering the closed interval `[start, stop]`.
    pub fn inclusive(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(stop.is_finite() && start.is_finite()) || stop < start {
            return Err(Error::InvalidGrid(format!("empty range [{start}, {stop}]")));
        }
        if !(step > 0.0) {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        let span = (stop - start) / step;
        let count = (span + 1e-9).floor() as usize + 1;
        Self::new(start, step, count)
    }

    /// Grid symmetric about zero covering the open interval
    /// `(-half_width, half_width)`, with zero as a grid point.
    pub fn open_symmetric(half_width: f64, step: f64) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidGrid(format!("half width must be positive, got {half_width}")));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        let ratio = half_width / step;
        let nearest = ratio.round();
        let half = if (ratio - nearest).abs() < 1e-9 { nearest as i64 - 1 } else { ratio.floor() as i64 };
        if half < 0 {
            return Self::new(0.0, step, 1);
        }
        let count = 2 * half as usize + 1;
        Self::new(-(half as f64) * step, step, count)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn point(&self, k: usize) -> f64 {
        self.start + k as f64 * self.step
    }

    pub fn last(&self) -> f64 {
        self.point(self.count - 1)
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }

    /// True when the grid is mirror-symmetric about zero.
    pub fn is_symmetric(&self) -> bool {
        let last = self.last();
        (self.start + last).abs() <= 1e-9 * self.step.max(last.abs())
    }

    /// Same-grid test with a relative tolerance on start and step.
    pub fn matches(&self, other: &FrequencyGrid) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);
        self.count == other.count && close(self.start, other.start) && close(self.step, other.step)
    }
}

/// Symbolic line spectrum: a list of `weight · δ(f - frequency)` terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LineSpectrum {
    lines: Vec<(f64, Complex)>,
    period: Option<f64>,
    truncation: usize,
}

impl LineSpectrum {
    /// Lines are sorted by frequency; duplicate frequencies are rejected.
    pub fn new(mut lines: Vec<(f64, Complex)>, period: Option<f64>, truncation: usize) -> Result<Self> {
        if lines.iter().any(|(f, w)| !f.is_finite() || !w.re.is_finite() || !w.im.is_finite()) {
            return Err(Error::NonFinite("line spectrum entry"));
        }
        lines.sort_by(|a, b| a.0.total_cmp(&b.0));
        if lines.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidConfig("line frequencies must be distinct".into()));
        }
        Ok(Self { lines, period, truncation })
    }

    pub fn lines(&self) -> &[(f64, Complex)] {
        &self.lines
    }

    /// `None` marks an aperiodic weight pattern.
    pub fn period(&self) -> Option<f64> {
        self.period
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Weight of the line at `frequency`, or zero when there is none.
    pub fn weight_at(&self, frequency: f64) -> Complex {
        self.lines.iter().find(|(f, _)| same_frequency(*f, frequency)).map(|(_, w)| *w).unwrap_or_default()
    }

    /// Restricts to lines with `lo <= f <= hi`.
    pub fn restrict(&self, lo: f64, hi: f64) -> LineSpectrum {
        LineSpectrum {
            lines: self.lines.iter().copied().filter(|(f, _)| *f >= lo && *f <= hi).collect(),
            period: self.period,
            truncation: self.truncation,
        }
    }

    /// Line-wise sum; lines at the same frequency merge.
    pub fn superpose(&self, other: &LineSpectrum) -> LineSpectrum {
        let mut merged: Vec<(f64, Complex)> = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.lines.len() || j < other.lines.len() {
            let next = match (self.lines.get(i), other.lines.get(j)) {
                (Some(a), Some(b)) if same_frequency(a.0, b.0) => {
                    i += 1;
                    j += 1;
                    (a.0, a.1 + b.1)
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    i += 1;
                    *a
                }
                (Some(_), Some(b)) => {
                    j += 1;
                    *b
                }
                (Some(a), None) => {
                    i += 1;
                    *a
                }
                (None, Some(b)) => {
                    j += 1;
                    *b
                }
                (None, None) => unreachable!(),
            };
            merged.push(next);
        }
        let period = match (self.period, other.period) {
            (Some(a), Some(b)) => {
                let (big, small) = if a >= b { (a, b) } else { (b, a) };
                let ratio = big / small;
                ((ratio - ratio.round()).abs() < 1e-9).then_some(big)
            }
            _ => None,
        };
        LineSpectrum { lines: merged, period, truncation: self.truncation.min(other.truncation) }
    }

    /// Largest weight difference against `other` over lines in `[lo, hi]`,
    /// treating a missing line as a zero weight.
    pub fn max_difference_on(&self, other: &LineSpectrum, lo: f64, hi: f64) -> f64 {
        let a = self.restrict(lo, hi);
        let b = other.restrict(lo, hi);
        let freqs = a.lines.iter().chain(b.lines.iter()).map(|(f, _)| *f);
        freqs.map(|f| (a.weight_at(f) - b.weight_at(f)).norm()).fold(0.0, f64::max)
    }
}

fn same_frequency(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

/// Complex values tabulated on a [`FrequencyGrid`]. Points removed by the
/// singularity guard are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSpectrum {
    grid: FrequencyGrid,
    values: Vec<Option<Complex>>,
}

impl DenseSpectrum {
    pub fn new(grid: FrequencyGrid, values: Vec<Option<Complex>>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::InvalidGrid(format!("{} values for a {}-point grid", values.len(), grid.count())));
        }
        Ok(Self { grid, values })
    }

    /// Evaluates `eval` at every grid point. [`Error::SingularFrequency`]
    /// masks the point; any other error aborts.
    pub fn tabulate<F>(grid: FrequencyGrid, mut eval: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<Complex>,
    {
        let values = grid
            .points()
            .map(|f| match eval(f) {
                Ok(v) => Ok(Some(v)),
                Err(Error::SingularFrequency { .. }) => Ok(None),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn values(&self) -> &[Option<Complex>] {
        &self.values
    }

    pub fn get(&self, k: usize) -> Option<Complex> {
        self.values.get(k).copied().flatten()
    }

    pub fn is_masked(&self, k: usize) -> bool {
        self.values[k].is_none()
    }

    pub fn mask(&self) -> Vec<bool> {
        self.values.iter().map(Option::is_none).collect()
    }

    /// `(frequency, value)` pairs for the unmasked points.
    pub fn iter_unmasked(&self) -> impl Iterator<Item = (f64, Complex)> + '_ {
        self.values.iter().enumerate().filter_map(|(k, v)| v.map(|v| (self.grid.point(k), v)))
    }

    /// Keeps only the imaginary part, as `i·Im(X)`.
    pub fn imaginary_part(&self) -> DenseSpectrum {
        self.map(|v| Complex::new(0.0, v.im))
    }

    pub fn map<F: Fn(Complex) -> Complex>(&self, op: F) -> DenseSpectrum {
        DenseSpectrum { grid: self.grid, values: self.values.iter().map(|v| v.map(&op)).collect() }
    }

    /// Pointwise sum; a point masked in either operand stays masked.
    pub fn add(&self, other: &DenseSpectrum) -> Result<DenseSpectrum> {
        if !self.grid.matches(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| Some((*a)? + (*b)?)).collect();
        Ok(DenseSpectrum { grid: self.grid, values })
    }

    /// Largest magnitude over the unmasked points.
    pub fn max_abs(&self) -> f64 {
        self.iter_unmasked().map(|(_, v)| v.norm()).fold(0.0, f64::max)
    }
}

/// Finite set of weighted sample instants.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSignal {
    positions: Vec<f64>,
    values: Vec<f64>,
    nominal_spec: SamplingSpec,
    window_length: usize,
}

impl DiscreteSignal {
    /// Positions must be strictly increasing and spaced by `spec.spacing()`.
    pub fn new(
        positions: Vec<f64>,
        values: Vec<f64>,
        nominal_spec: SamplingSpec,
        window_length: usize,
    ) -> Result<Self> {
        if positions.len() != values.len() {
            return Err(Error::InvalidSignal(format!("{} positions but {} values", positions.len(), values.len())));
        }
        if positions.iter().chain(&values).any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("signal sample"));
        }
        let spacing = nominal_spec.spacing();
        for w in positions.windows(2) {
            let gap = w[1] - w[0];
            if gap <= 0.0 {
                return Err(Error::InvalidSignal("positions must be strictly increasing".into()));
            }
            if (gap - spacing).abs() > 1e-9 * spacing {
                return Err(Error::InvalidSignal(format!(
                    "sample gap {gap} differs from the sampling interval {spacing}"
                )));
            }
        }
        Ok(Self { positions, values, nominal_spec, window_length })
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn nominal_spec(&self) -> &SamplingSpec {
        &self.nominal_spec
    }

    pub fn window_length(&self) -> usize {
        self.window_length
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Adds the values of a signal sampled at the same instants.
    pub fn superpose(&self, other: &DiscreteSignal) -> Result<DiscreteSignal> {
        let aligned = self.positions.len() == other.positions.len()
            && self.positions.iter().zip(&other.positions).all(|(a, b)| (a - b).abs() <= 1e-12 * a.abs().max(1.0));
        if !aligned {
            return Err(Error::InvalidSignal("signals are sampled at different instants".into()));
        }
        Ok(DiscreteSignal {
            positions: self.positions.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
            nominal_spec: self.nominal_spec,
            window_length: self.window_length,
        })
    }
}
