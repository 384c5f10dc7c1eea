//! Ordinary and symmetric DFTs, their inverses, direct DTFT evaluation and
//! phase-correct zero padding.
//!
//! All forward transforms are unnormalized; inverses carry the `1/N`.
//! Symmetric forms report their output in ascending frequency order,
//! `m = -⌊N/2⌋ ..= ⌈N/2⌉ - 1`. The ordinary form uses `m = 0..N`.
//!
//! Sample indices are tracked doubled (`2n`) so that the half-integer time
//! indices of the corrected symmetric DFT stay exact integers, and every
//! kernel phase is reduced modulo a full turn before the trig call.

use std::f64::consts::PI;

use crate::domain::{Complex, DenseSpectrum, DiscreteSignal, FrequencyGrid, SamplingKind, SamplingSpec};
use crate::error::{Error, Result};

/// Which DFT definition produced a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DftForm {
    /// `n = 0..N`.
    Ordinary,
    /// Odd `N = 2k+1`, `n = -k..=k`.
    SymmetricOdd,
    /// Even `N = 2k`, integer `n = -k..k`; not symmetric about zero.
    SymmetricEvenLegacy,
    /// Any `N`, `n = -(N-1)/2 ..= (N-1)/2` in unit steps (half-integers for even `N`).
    SymmetricCorrected,
}

impl DftForm {
    pub const ALL: [DftForm; 4] =
        [DftForm::Ordinary, DftForm::SymmetricOdd, DftForm::SymmetricEvenLegacy, DftForm::SymmetricCorrected];

    pub fn name(self) -> &'static str {
        match self {
            DftForm::Ordinary => "odft",
            DftForm::SymmetricOdd => "sdft-odd",
            DftForm::SymmetricEvenLegacy => "sdft-even-legacy",
            DftForm::SymmetricCorrected => "sdft-corrected",
        }
    }

    /// Whether the form is defined for a length-`n` input.
    pub fn accepts(self, n: usize) -> bool {
        match self {
            DftForm::Ordinary | DftForm::SymmetricCorrected => n >= 1,
            DftForm::SymmetricOdd => n % 2 == 1,
            DftForm::SymmetricEvenLegacy => n >= 2 && n.is_multiple_of(2),
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if !self.accepts(n) {
            let expected = if self == DftForm::SymmetricOdd { "odd" } else { "even" };
            return Err(Error::ParityMismatch { form: self.name(), expected, len: n });
        }
        Ok(())
    }

    /// Doubled time index `2n` of the sample at ordinal position `k`.
    fn doubled_time_index(self, k: usize, n: usize) -> i64 {
        let k = k as i64;
        let n = n as i64;
        match self {
            DftForm::Ordinary => 2 * k,
            DftForm::SymmetricOdd | DftForm::SymmetricCorrected => 2 * k - (n - 1),
            DftForm::SymmetricEvenLegacy => 2 * k - n,
        }
    }

    /// Time index `n` (possibly half-integer) of ordinal sample `k`.
    pub fn time_index(self, k: usize, n: usize) -> f64 {
        self.doubled_time_index(k, n) as f64 / 2.0
    }

    /// Frequency indices `m`, ascending, for a length-`n` transform.
    pub fn frequency_indices(self, n: usize) -> Vec<i64> {
        match self {
            DftForm::Ordinary => (0..n as i64).collect(),
            _ => centered_indices(n),
        }
    }

    /// The physical signal this form assumes: sample `k` sits at
    /// `time_index(k) · ΔT`.
    pub fn signal(self, x: &[f64], sample_rate: f64) -> Result<DiscreteSignal> {
        self.check(x.len())?;
        let n = x.len();
        let kind = if self.doubled_time_index(0, n) % 2 == 0 { SamplingKind::Odd } else { SamplingKind::Even };
        let spec = SamplingSpec::new(kind, sample_rate)?;
        let positions = (0..n).map(|k| self.time_index(k, n) * spec.delta_t()).collect();
        DiscreteSignal::new(positions, x.to_vec(), spec, n)
    }
}

fn centered_indices(n: usize) -> Vec<i64> {
    let lo = -((n / 2) as i64);
    (0..n as i64).map(|j| lo + j).collect()
}

/// `e^{-iπ·p/len}` with `p` reduced modulo `2·len` first.
fn kernel(p: i64, len: i64) -> Complex {
    let p = p.rem_euclid(2 * len);
    Complex::cis(-PI * p as f64 / len as f64)
}

/// Output of one of the four DFT forms.
#[derive(Debug, Clone, PartialEq)]
pub struct DftResult {
    values: Vec<Complex>,
    form: DftForm,
}

impl DftResult {
    pub fn values(&self) -> &[Complex] {
        &self.values
    }

    pub fn form(&self) -> DftForm {
        self.form
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Frequency index `m` of each entry of [`values`](Self::values).
    pub fn frequency_indices(&self) -> Vec<i64> {
        self.form.frequency_indices(self.values.len())
    }

    /// Value at frequency index `m`, if `m` is in the reported range.
    pub fn at(&self, m: i64) -> Option<Complex> {
        let first = self.form.frequency_indices(self.len()).first().copied()?;
        let k = usize::try_from(m - first).ok()?;
        self.values.get(k).copied()
    }
}

/// Evaluates `form` on `x` by direct summation in ascending `n`.
pub fn transform<C>(x: &[C], form: DftForm) -> Result<DftResult>
where
    C: Copy + Into<Complex>,
{
    form.check(x.len())?;
    let n = x.len();
    let len = n as i64;
    let times: Vec<i64> = (0..n).map(|k| form.doubled_time_index(k, n)).collect();
    let values = form
        .frequency_indices(n)
        .into_iter()
        .map(|m| x.iter().zip(&times).map(|(&v, &t2)| v.into() * kernel(m * t2, len)).sum())
        .collect();
    Ok(DftResult { values, form })
}

/// Ordinary DFT, `X(m) = Σ_{n=0}^{N-1} x(n) e^{-i2πmn/N}`.
pub fn odft<C: Copy + Into<Complex>>(x: &[C]) -> Result<DftResult> {
    transform(x, DftForm::Ordinary)
}

/// Symmetric DFT for odd `N`.
pub fn sdft_odd<C: Copy + Into<Complex>>(x: &[C]) -> Result<DftResult> {
    transform(x, DftForm::SymmetricOdd)
}

/// The uncorrected even-length symmetric DFT over integer `n = -k..k`.
pub fn sdft_even_legacy<C: Copy + Into<Complex>>(x: &[C]) -> Result<DftResult> {
    transform(x, DftForm::SymmetricEvenLegacy)
}

/// Symmetric DFT whose time indices are centred on zero for any `N`.
pub fn sdft_corrected<C: Copy + Into<Complex>>(x: &[C]) -> Result<DftResult> {
    transform(x, DftForm::SymmetricCorrected)
}

/// Inverts any forward form, returning samples in ordinal order.
pub fn inverse(result: &DftResult) -> Vec<Complex> {
    let n = result.len();
    let len = n as i64;
    let freqs = result.frequency_indices();
    let scale = 1.0 / n as f64;
    (0..n)
        .map(|k| {
            let t2 = result.form.doubled_time_index(k, n);
            let acc: Complex = result.values.iter().zip(&freqs).map(|(&v, &m)| v * kernel(-m * t2, len)).sum();
            acc * scale
        })
        .collect()
}

/// `Σ_k v_k e^{-i2πf t_k}` at each grid frequency.
pub fn dtft_direct(signal: &DiscreteSignal, grid: &FrequencyGrid) -> Result<DenseSpectrum> {
    if signal.is_empty() {
        return Err(Error::EmptyInput);
    }
    DenseSpectrum::tabulate(*grid, |f| Ok(dtft_at(signal, f)))
}

/// Single-frequency DTFT.
pub fn dtft_at(signal: &DiscreteSignal, frequency: f64) -> Complex {
    signal
        .positions()
        .iter()
        .zip(signal.values())
        .map(|(&t, &v)| {
            let cycles = frequency * t;
            v * Complex::cis(-2.0 * PI * (cycles - cycles.round()))
        })
        .sum()
}

/// Corrected symmetric DFT of `x` after padding to `factor·N` samples.
///
/// The samples keep their physical instants; the padding only lengthens the
/// transform, so the result is the DTFT of the same signal sampled at
/// `m·f_s/(L·N)`. Output is ascending in frequency.
pub fn sdft_zero_padded(x: &[f64], factor: usize, sample_rate: f64) -> Result<DenseSpectrum> {
    if factor < 1 {
        return Err(Error::InvalidConfig("zero-padding factor must be at least 1".into()));
    }
    if x.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(sample_rate.is_finite() && sample_rate > 0.0) {
        return Err(Error::InvalidSampleRate(sample_rate));
    }
    let n = x.len();
    let total = n * factor;
    let len = total as i64;
    let times: Vec<i64> = (0..n).map(|k| DftForm::SymmetricCorrected.doubled_time_index(k, n)).collect();
    let freqs = centered_indices(total);
    let step = sample_rate / total as f64;
    let grid = FrequencyGrid::new(freqs[0] as f64 * step, step, total)?;
    let values =
        freqs.iter().map(|&m| Some(x.iter().zip(&times).map(|(&v, &t2)| v * kernel(m * t2, len)).sum())).collect();
    DenseSpectrum::new(grid, values)
}
