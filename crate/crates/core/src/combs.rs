//! Fourier transforms of the sampling functions.
//!
//! Two-sided combs transform to symbolic [`LineSpectrum`]s. One-sided
//! (half-infinite), step and half-infinite reversal samplings have dense
//! closed forms in `1/sin` or `1/cos`. The one-sided series do not converge
//! pointwise; their transforms are understood as Abel sums, and
//! [`cesaro_oracle`] evaluates the same regularized value by brute force.

use std::f64::consts::PI;

use crate::domain::{
    denominator_magnitude, Complex, DenseSpectrum, DiscreteSignal, FrequencyGrid, HalfCase, LineSpectrum, ReversalCase,
    SamplingKind, SamplingSpec, DEFAULT_TOLERANCE,
};
use crate::error::{Error, Result};

/// Default line-spectrum truncation `|j| <= 16`.
pub const DEFAULT_TRUNCATION: usize = 16;

/// Fewest terms [`cesaro_oracle`] accepts.
pub const MIN_CESARO_TERMS: usize = 10;

/// Coefficient attached to each delta of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignRule {
    AllPlus,
    /// `(-1)^n`.
    Alternating,
    /// `sign(t)` of the delta position.
    StepSign,
}

/// `Σ_{n=start}^{end} c(n) δ(t - (n + offset)·spacing)`, with `None` bounds
/// standing for ±∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    start: Option<i64>,
    end: Option<i64>,
    offset: f64,
    spacing: f64,
    sign: SignRule,
}

impl SeriesSpec {
    pub fn new(start: Option<i64>, end: Option<i64>, offset: f64, spacing: f64, sign: SignRule) -> Result<Self> {
        if !(spacing.is_finite() && spacing > 0.0) {
            return Err(Error::InvalidConfig(format!("series spacing must be positive, got {spacing}")));
        }
        if !offset.is_finite() {
            return Err(Error::NonFinite("series offset"));
        }
        if let (Some(s), Some(e)) = (start, end) {
            if s > e {
                return Err(Error::InvalidConfig(format!("series index range {s}..={e} is empty")));
            }
        }
        Ok(Self { start, end, offset, spacing, sign })
    }

    /// The delta train behind `spec`.
    pub fn for_sampling(spec: &SamplingSpec) -> Result<Self> {
        let dt = spec.delta_t();
        let half = 0.5 * dt;
        let (start, end, offset, spacing, sign) = match spec.kind() {
            SamplingKind::Odd => (None, None, 0.0, dt, SignRule::AllPlus),
            SamplingKind::Shifted(r) => (None, None, r, dt, SignRule::AllPlus),
            SamplingKind::Even => (None, None, 0.5, dt, SignRule::AllPlus),
            SamplingKind::QuarterForward => (None, None, 0.25, dt, SignRule::AllPlus),
            SamplingKind::QuarterBackward => (None, None, -0.25, dt, SignRule::AllPlus),
            SamplingKind::OddReversal => (None, None, 0.0, half, SignRule::Alternating),
            SamplingKind::EvenReversal => (None, None, 1.0, half, SignRule::Alternating),
            SamplingKind::Step => (None, None, 0.5, dt, SignRule::StepSign),
            SamplingKind::Half(case) => match case {
                HalfCase::Case1 => (Some(0), None, 0.0, dt, SignRule::AllPlus),
                HalfCase::Case2 => (Some(1), None, 0.0, dt, SignRule::AllPlus),
                HalfCase::Case3 => (None, Some(-1), 0.0, dt, SignRule::AllPlus),
                HalfCase::Case4 => (None, Some(0), 0.0, dt, SignRule::AllPlus),
                HalfCase::Case5 => (None, Some(0), -0.5, dt, SignRule::AllPlus),
                HalfCase::Case6 => (Some(0), None, 0.5, dt, SignRule::AllPlus),
            },
            SamplingKind::HalfReversal(case) => match case {
                ReversalCase::Case1 => (Some(0), None, 0.0, half, SignRule::Alternating),
                ReversalCase::Case2 => (Some(0), None, 1.0, half, SignRule::Alternating),
                ReversalCase::Case3 => (Some(0), None, 0.5, half, SignRule::Alternating),
                // -(m + ½)ΔT/2 for m >= 0, written with n = -m <= 0.
                ReversalCase::Case4 => (None, Some(0), -0.5, half, SignRule::Alternating),
            },
        };
        Self::new(start, end, offset, spacing, sign)
    }

    pub fn is_one_sided(&self) -> bool {
        self.start.is_some() != self.end.is_some()
    }

    pub fn position(&self, n: i64) -> f64 {
        (n as f64 + self.offset) * self.spacing
    }

    pub fn coefficient(&self, n: i64) -> f64 {
        match self.sign {
            SignRule::AllPlus => 1.0,
            SignRule::Alternating => {
                if n.rem_euclid(2) == 0 {
                    1.0
                } else {
                    -1.0
                }
            }
            SignRule::StepSign => {
                let t = self.position(n);
                if t > 0.0 {
                    1.0
                } else if t < 0.0 {
                    -1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Indices in summation order: outward from the finite bound.
    fn one_sided_indices(&self) -> Result<Box<dyn Iterator<Item = i64>>> {
        match (self.start, self.end) {
            (Some(s), None) => Ok(Box::new(s..)),
            (None, Some(e)) => Ok(Box::new((0..).map(move |k| e - k))),
            _ => Err(Error::NotOneSided),
        }
    }
}

/// The deltas of `spec` that fall inside `[t_min, t_max]`.
pub fn comb_time(spec: &SamplingSpec, t_min: f64, t_max: f64) -> Result<DiscreteSignal> {
    if !(t_min.is_finite() && t_max.is_finite() && t_min < t_max) {
        return Err(Error::InvalidWindow { t_min, t_max });
    }
    let series = SeriesSpec::for_sampling(spec)?;
    let lo = (t_min / series.spacing - series.offset - 1e-9).ceil() as i64;
    let hi = (t_max / series.spacing - series.offset + 1e-9).floor() as i64;
    let lo = series.start.map_or(lo, |s| lo.max(s));
    let hi = series.end.map_or(hi, |e| hi.min(e));
    let (positions, values): (Vec<f64>, Vec<f64>) =
        (lo..=hi).map(|n| (series.position(n), series.coefficient(n))).unzip();
    let len = positions.len();
    DiscreteSignal::new(positions, values, *spec, len)
}

/// `c^j` for `c` in `{1, -1, i, -i}` given as a quarter-turn count.
fn quarter_power(quarter_turns: i64) -> Complex {
    match quarter_turns.rem_euclid(4) {
        0 => Complex::new(1.0, 0.0),
        1 => Complex::new(0.0, 1.0),
        2 => Complex::new(-1.0, 0.0),
        _ => Complex::new(0.0, -1.0),
    }
}

/// Smallest `q <= 64` with `q·r` integral.
fn shift_period(r: f64) -> Option<u32> {
    (1..=64u32).find(|&q| {
        let x = q as f64 * r;
        (x - x.round()).abs() < 1e-12
    })
}

/// Line spectrum of a two-sided comb, lines for `|j| <= truncation`.
///
/// | kind           | line at        | weight                  |
/// |----------------|----------------|-------------------------|
/// | odd            | `j f_s`        | `f_s`                   |
/// | shifted by `r` | `j f_s`        | `f_s e^{-i2πjr}`        |
/// | even           | `j f_s`        | `f_s (-1)^j`            |
/// | quarter fwd    | `j f_s`        | `f_s i^j`               |
/// | quarter bwd    | `j f_s`        | `f_s (-i)^j`            |
/// | odd reversal   | `(2j-1) f_s`   | `2 f_s`                 |
/// | even reversal  | `(2j-1) f_s`   | `2 f_s i^{2j-1}`        |
///
/// The even-reversal weights are the tabulated `2 f_s i^{2j-1}`. Translating
/// the odd-reversal comb by `ΔT/2` gives `-2 f_s` on every line instead; the
/// tabulated form is kept.
pub fn comb_ft_lines(spec: &SamplingSpec, truncation: usize) -> Result<LineSpectrum> {
    let fs = spec.sample_rate();
    let j_max = truncation as i64;
    let js = -j_max..=j_max;
    let (lines, period): (Vec<(f64, Complex)>, Option<f64>) = match spec.kind().canonical() {
        SamplingKind::Odd => (js.map(|j| (j as f64 * fs, Complex::new(fs, 0.0))).collect(), Some(fs)),
        SamplingKind::Even => (js.map(|j| (j as f64 * fs, fs * quarter_power(2 * j))).collect(), Some(2.0 * fs)),
        SamplingKind::QuarterForward => (js.map(|j| (j as f64 * fs, fs * quarter_power(j))).collect(), Some(4.0 * fs)),
        SamplingKind::QuarterBackward => {
            (js.map(|j| (j as f64 * fs, fs * quarter_power(-j))).collect(), Some(4.0 * fs))
        }
        SamplingKind::Shifted(r) => {
            let lines = js
                .map(|j| {
                    let turns = j as f64 * r;
                    (j as f64 * fs, fs * Complex::cis(-2.0 * PI * (turns - turns.round())))
                })
                .collect();
            (lines, shift_period(r).map(|q| q as f64 * fs))
        }
        SamplingKind::OddReversal => {
            (js.map(|j| ((2 * j - 1) as f64 * fs, Complex::new(2.0 * fs, 0.0))).collect(), Some(2.0 * fs))
        }
        SamplingKind::EvenReversal => {
            (js.map(|j| ((2 * j - 1) as f64 * fs, 2.0 * fs * quarter_power(2 * j - 1))).collect(), Some(4.0 * fs))
        }
        SamplingKind::Half(_) => return Err(Error::NoLineSpectrum("half-infinite sampling")),
        SamplingKind::HalfReversal(_) => return Err(Error::NoLineSpectrum("half-infinite reversal sampling")),
        SamplingKind::Step => return Err(Error::NoLineSpectrum("step sampling")),
    };
    LineSpectrum::new(lines, period, truncation)
}

fn check_delta_t(delta_t: f64) -> Result<()> {
    if !(delta_t.is_finite() && delta_t > 0.0) {
        return Err(Error::InvalidSampleRate(1.0 / delta_t));
    }
    Ok(())
}

/// `frequency` shifted by a whole number of periods into `[-period/2, period/2)`.
/// Exact: `%` is exact and each correction is a Sterbenz subtraction.
fn reduce(frequency: f64, period: f64) -> f64 {
    let r = frequency % period;
    if r >= 0.5 * period {
        r - period
    } else if r < -0.5 * period {
        r + period
    } else {
        r
    }
}

/// Transform of half-infinite case `case`; `θ = π f ΔT`.
///
/// | case | value                  |
/// |------|------------------------|
/// | 1    | `e^{iθ} / (2i sin θ)`  |
/// | 2    | `e^{-iθ} / (2i sin θ)` |
/// | 3    | `e^{iθ} / (2i sin -θ)` |
/// | 4    | `e^{-iθ} / (2i sin -θ)`|
/// | 5    | `1 / (2i sin -θ)`      |
/// | 6    | `1 / (2i sin θ)`       |
pub fn half_ft(case: HalfCase, frequency: f64, delta_t: f64) -> Result<Complex> {
    check_delta_t(delta_t)?;
    let theta = PI * reduce(frequency, 2.0 / delta_t) * delta_t;
    let s = theta.sin();
    if !(s.abs() >= DEFAULT_TOLERANCE) {
        return Err(Error::SingularFrequency { frequency });
    }
    let denom = Complex::new(0.0, 2.0 * s);
    let value = match case {
        HalfCase::Case1 => Complex::cis(theta) / denom,
        HalfCase::Case2 => Complex::cis(-theta) / denom,
        HalfCase::Case3 => Complex::cis(theta) / -denom,
        HalfCase::Case4 => Complex::cis(-theta) / -denom,
        HalfCase::Case5 => 1.0 / -denom,
        HalfCase::Case6 => 1.0 / denom,
    };
    Ok(value)
}

/// Transform of step sampling, `-i / sin(π f ΔT)`.
pub fn step_ft(frequency: f64, delta_t: f64) -> Result<Complex> {
    check_delta_t(delta_t)?;
    let s = (PI * reduce(frequency, 2.0 / delta_t) * delta_t).sin();
    if !(s.abs() >= DEFAULT_TOLERANCE) {
        return Err(Error::SingularFrequency { frequency });
    }
    Ok(Complex::new(0.0, -1.0 / s))
}

/// Transform of half-infinite reversal case `case`; `φ = π f ΔT / 2`.
///
/// | case | value                   |
/// |------|-------------------------|
/// | 1    | `e^{iφ} / (2 cos φ)`    |
/// | 2    | `e^{-iφ} / (2 cos -φ)`  |
/// | 3    | `1 / (2 cos φ)`         |
/// | 4    | `1 / (2 cos -φ)`        |
pub fn half_reversal_ft(case: ReversalCase, frequency: f64, delta_t: f64) -> Result<Complex> {
    check_delta_t(delta_t)?;
    let phi = 0.5 * PI * reduce(frequency, 4.0 / delta_t) * delta_t;
    if !(phi.cos().abs() >= DEFAULT_TOLERANCE) {
        return Err(Error::SingularFrequency { frequency });
    }
    let value = match case {
        ReversalCase::Case1 => Complex::cis(phi) / (2.0 * phi.cos()),
        ReversalCase::Case2 => Complex::cis(-phi) / (2.0 * (-phi).cos()),
        ReversalCase::Case3 => Complex::new(1.0 / (2.0 * phi.cos()), 0.0),
        ReversalCase::Case4 => Complex::new(1.0 / (2.0 * (-phi).cos()), 0.0),
    };
    Ok(value)
}

/// Dense closed form for half-infinite, step and half-reversal kinds.
pub fn dense_ft(spec: &SamplingSpec, frequency: f64) -> Result<Complex> {
    let dt = spec.delta_t();
    match spec.kind() {
        SamplingKind::Half(case) => half_ft(case, frequency, dt),
        SamplingKind::HalfReversal(case) => half_reversal_ft(case, frequency, dt),
        SamplingKind::Step => step_ft(frequency, dt),
        _ => Err(Error::InvalidConfig(format!("{} is a two-sided comb; use its line spectrum", spec.kind()))),
    }
}

/// [`dense_ft`] on a grid, masking points whose denominator falls below `tol`.
pub fn dense_spectrum(spec: &SamplingSpec, grid: &FrequencyGrid, tol: f64) -> Result<DenseSpectrum> {
    DenseSpectrum::tabulate(*grid, |f| {
        if !(denominator_magnitude(f, spec) >= tol) {
            return Err(Error::SingularFrequency { frequency: f });
        }
        dense_ft(spec, f)
    })
}

/// Mean of the first `terms` partial sums of `Σ c(n) e^{-i2πf t(n)}`.
///
/// For the bounded geometric-phase series here the Cesàro mean converges to
/// the Abel sum with error `O(1/M)`.
pub fn cesaro_oracle(series: &SeriesSpec, frequency: f64, terms: usize) -> Result<Complex> {
    if terms < MIN_CESARO_TERMS {
        return Err(Error::TooFewTerms { min: MIN_CESARO_TERMS, got: terms });
    }
    if !frequency.is_finite() {
        return Err(Error::NonFinite("frequency"));
    }
    let mut partial = Complex::new(0.0, 0.0);
    let mut total = Complex::new(0.0, 0.0);
    for n in series.one_sided_indices()?.take(terms) {
        let cycles = frequency * series.position(n);
        partial += series.coefficient(n) * Complex::cis(-2.0 * PI * (cycles - cycles.round()));
        total += partial;
    }
    Ok(total / terms as f64)
}
