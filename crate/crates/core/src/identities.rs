//! Residuals of the algebraic identities linking the half-infinite closed
//! forms, evaluated away from the delta supports where every comb term on
//! the right-hand side vanishes.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combs::{comb_ft_lines, half_ft, half_reversal_ft};
use crate::domain::{
    singularity_guard, Complex, HalfCase, ReversalCase, SamplingKind, SamplingSpec, DEFAULT_TOLERANCE,
};
use crate::error::{Error, Result};

/// Sample rate used by [`run_identity_suite`]. The residuals depend only on
/// `f·ΔT`, so any positive value gives the same numbers.
pub const SUITE_SAMPLE_RATE: f64 = 20.0;

/// Pass threshold on `max_abs_residual`.
pub const RESIDUAL_THRESHOLD: f64 = 1e-12;

/// The identities the suite checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `S_h1 - S_h2 = 1` (the two supports differ by one delta at `t = 0`).
    ImpulseRight,
    /// `S_h4 - S_h3 = 1`.
    ImpulseLeft,
    /// `S_hc(f; ΔT) + S_partner(f; ΔT) = S_hc(f; ΔT/2)`, partner 6 for cases
    /// 1–2 and 5 for cases 3–4.
    Doubling(HalfCase),
    /// `S_h6 + S_h5` is the even comb: zero off its lines.
    EvenSplit,
    /// `S_h1 + S_h4` is the odd comb plus one: `1` off its lines.
    OddSplitPlus,
    /// `S_h2 + S_h3` is the odd comb minus one: `-1` off its lines.
    OddSplitMinus,
    /// `S_h1 + S_h3`: even comb shifted left by `ΔT/2`, zero off its lines.
    ShiftLeft,
    /// `S_h2 + S_h4`: even comb shifted right by `ΔT/2`, zero off its lines.
    ShiftRight,
    /// Reversal case 4 minus case 3 is the even reversal comb: zero off its lines.
    ReversalSplit,
    /// Odd comb plus even comb equals the frequency-doubled odd comb, line by line.
    CombDoubling,
}

impl Identity {
    /// Every identity, pointwise ones first.
    pub const ALL: [Identity; 13] = [
        Identity::ImpulseRight,
        Identity::ImpulseLeft,
        Identity::Doubling(HalfCase::Case1),
        Identity::Doubling(HalfCase::Case2),
        Identity::Doubling(HalfCase::Case3),
        Identity::Doubling(HalfCase::Case4),
        Identity::EvenSplit,
        Identity::OddSplitPlus,
        Identity::OddSplitMinus,
        Identity::ShiftLeft,
        Identity::ShiftRight,
        Identity::ReversalSplit,
        Identity::CombDoubling,
    ];

    pub fn label(&self) -> String {
        match self {
            Identity::ImpulseRight => "impulse-right".into(),
            Identity::ImpulseLeft => "impulse-left".into(),
            Identity::Doubling(c) => format!("doubling-case-{}", c.number()),
            Identity::EvenSplit => "even-split".into(),
            Identity::OddSplitPlus => "odd-split-plus".into(),
            Identity::OddSplitMinus => "odd-split-minus".into(),
            Identity::ShiftLeft => "shift-left".into(),
            Identity::ShiftRight => "shift-right".into(),
            Identity::ReversalSplit => "reversal-split".into(),
            Identity::CombDoubling => "comb-doubling".into(),
        }
    }

    /// Sampling kinds whose guards a test frequency must pass.
    fn guarded_kinds(&self) -> &'static [SamplingKind] {
        match self {
            Identity::ReversalSplit => &[SamplingKind::HalfReversal(ReversalCase::Case3)],
            _ => &[SamplingKind::Step],
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Outcome of one identity over a batch of frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub sample_count: usize,
    pub max_abs_residual: f64,
    /// Frequencies (Hz) at which the residual was evaluated. For
    /// [`Identity::CombDoubling`] these are the compared line locations.
    pub frequencies_tested: Vec<f64>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.max_abs_residual < RESIDUAL_THRESHOLD
    }
}

/// `[S_hc(f; ΔT) + S_partner(f; ΔT)] - S_hc(f; ΔT/2)` for cases 1–4.
pub fn doubling_residual(case: HalfCase, frequency: f64, delta_t: f64) -> Result<Complex> {
    let partner = match case {
        HalfCase::Case1 | HalfCase::Case2 => HalfCase::Case6,
        HalfCase::Case3 | HalfCase::Case4 => HalfCase::Case5,
        HalfCase::Case5 | HalfCase::Case6 => {
            return Err(Error::InvalidCase { family: "frequency-doubling", case: case.number() })
        }
    };
    let doubled = half_ft(case, frequency, 0.5 * delta_t)?;
    Ok(half_ft(case, frequency, delta_t)? + half_ft(partner, frequency, delta_t)? - doubled)
}

/// Left-hand side minus the off-line value of the right-hand side.
pub fn superposition_residual(identity: Identity, frequency: f64, delta_t: f64) -> Result<Complex> {
    let h = |c| half_ft(c, frequency, delta_t);
    let r = |c| half_reversal_ft(c, frequency, delta_t);
    use HalfCase::*;
    let value = match identity {
        Identity::ImpulseRight => h(Case1)? - h(Case2)? - 1.0,
        Identity::ImpulseLeft => h(Case4)? - h(Case3)? - 1.0,
        Identity::Doubling(case) => doubling_residual(case, frequency, delta_t)?,
        Identity::EvenSplit => h(Case6)? + h(Case5)?,
        Identity::OddSplitPlus => h(Case1)? + h(Case4)? - 1.0,
        Identity::OddSplitMinus => h(Case2)? + h(Case3)? + 1.0,
        Identity::ShiftLeft => h(Case1)? + h(Case3)?,
        Identity::ShiftRight => h(Case2)? + h(Case4)?,
        Identity::ReversalSplit => r(ReversalCase::Case4)? - r(ReversalCase::Case3)?,
        Identity::CombDoubling => return Err(Error::InvalidConfig("comb doubling is a line-spectrum identity".into())),
    };
    Ok(value)
}

/// `f·ΔT` drawn uniformly from `(0.01, 0.49) ∪ (0.51, 0.99)` with a random sign.
fn draw_normalized(rng: &mut ChaCha8Rng) -> f64 {
    let mut x = rng.gen_range(0.01..0.97);
    if x >= 0.49 {
        x += 0.02;
    }
    if rng.gen_bool(0.5) {
        -x
    } else {
        x
    }
}

fn passes_guards(identity: Identity, frequency: f64, rate: f64) -> Result<bool> {
    for &kind in identity.guarded_kinds() {
        let spec = SamplingSpec::new(kind, rate)?;
        if singularity_guard(frequency, &spec, DEFAULT_TOLERANCE) {
            return Ok(false);
        }
    }
    if let Identity::Doubling(_) = identity {
        let fine = SamplingSpec::new(SamplingKind::Step, 2.0 * rate)?;
        if singularity_guard(frequency, &fine, DEFAULT_TOLERANCE) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates one pointwise identity at the given frequencies.
pub fn evaluate_identity(identity: Identity, frequencies: &[f64], sample_rate: f64) -> Result<IdentityReport> {
    let delta_t = 1.0 / sample_rate;
    let mut max_abs_residual: f64 = 0.0;
    for &f in frequencies {
        let r = superposition_residual(identity, f, delta_t)?;
        max_abs_residual = max_abs_residual.max(r.norm());
    }
    Ok(IdentityReport {
        identity,
        sample_count: frequencies.len(),
        max_abs_residual,
        frequencies_tested: frequencies.to_vec(),
    })
}

/// Odd(f_s) + Even(f_s) against Odd(2 f_s) on `|f| <= truncation · f_s`.
pub fn comb_doubling_report(sample_rate: f64, truncation: usize) -> Result<IdentityReport> {
    let odd = comb_ft_lines(&SamplingSpec::new(SamplingKind::Odd, sample_rate)?, truncation)?;
    let even = comb_ft_lines(&SamplingSpec::new(SamplingKind::Even, sample_rate)?, truncation)?;
    let doubled = comb_ft_lines(&SamplingSpec::new(SamplingKind::Odd, 2.0 * sample_rate)?, truncation)?;
    let edge = truncation as f64 * sample_rate;
    let sum = odd.superpose(&even).restrict(-edge, edge);
    let max_abs_residual = sum.max_difference_on(&doubled, -edge, edge);
    let frequencies_tested: Vec<f64> = sum.lines().iter().map(|l| l.0).collect();
    Ok(IdentityReport {
        identity: Identity::CombDoubling,
        sample_count: frequencies_tested.len(),
        max_abs_residual,
        frequencies_tested,
    })
}

/// Draws `samples` guarded frequencies per identity from `seed` and reports
/// the largest residual of each pointwise identity.
///
/// [`Identity::CombDoubling`] is not frequency-sampled; see
/// [`comb_doubling_report`].
pub fn run_identity_suite(seed: u64, samples: usize) -> Result<Vec<IdentityReport>> {
    if samples == 0 {
        return Err(Error::InvalidConfig("at least one sample per identity is required".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Identity::ALL
        .iter()
        .filter(|id| **id != Identity::CombDoubling)
        .map(|&identity| {
            let mut freqs = Vec::with_capacity(samples);
            while freqs.len() < samples {
                let f = draw_normalized(&mut rng) * SUITE_SAMPLE_RATE;
                if passes_guards(identity, f, SUITE_SAMPLE_RATE)? {
                    freqs.push(f);
                }
            }
            evaluate_identity(identity, &freqs, SUITE_SAMPLE_RATE)
        })
        .collect()
}
