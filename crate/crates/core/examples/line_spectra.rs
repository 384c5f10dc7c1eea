//! Line spectra of the two-sided sampling combs, and the doubling relation
//! Odd(f_s) + Even(f_s) = Odd(2 f_s).

use sampling_ft::combs::comb_ft_lines;
use sampling_ft::{SamplingKind, SamplingSpec};

fn main() -> sampling_ft::Result<()> {
    let fs = 20.0;
    let kinds = [
        SamplingKind::Odd,
        SamplingKind::Even,
        SamplingKind::QuarterForward,
        SamplingKind::QuarterBackward,
        SamplingKind::Shifted(1.0 / 3.0),
        SamplingKind::OddReversal,
        SamplingKind::EvenReversal,
    ];
    for kind in kinds {
        let lines = comb_ft_lines(&SamplingSpec::new(kind, fs)?, 2)?;
        println!("{kind} (period {:?} Hz)", lines.period());
        for (f, w) in lines.lines() {
            println!("  {f:>7.1} Hz  {:>8.3} {:+8.3}i", w.re, w.im);
        }
    }

    let odd = comb_ft_lines(&SamplingSpec::new(SamplingKind::Odd, fs)?, 4)?;
    let even = comb_ft_lines(&SamplingSpec::new(SamplingKind::Even, fs)?, 4)?;
    let doubled = comb_ft_lines(&SamplingSpec::new(SamplingKind::Odd, 2.0 * fs)?, 2)?;
    let edge = 80.0;
    let diff = odd.superpose(&even).max_difference_on(&doubled, -edge, edge);
    println!("max |Odd(20) + Even(20) - Odd(40)| on |f| <= {edge} Hz: {diff}");
    Ok(())
}
