//! The four DFT forms on the same data, round trips, and phase-correct zero
//! padding of the corrected symmetric DFT.

use sampling_ft::transforms::{dtft_direct, inverse, sdft_zero_padded, transform};
use sampling_ft::DftForm;

fn main() -> sampling_ft::Result<()> {
    let x = [1.0, 2.0, 3.0, 4.0];
    for form in DftForm::ALL {
        match transform(&x, form) {
            Ok(result) => {
                let back = inverse(&result);
                let err = x.iter().zip(&back).map(|(a, b)| (b - a).norm()).fold(0.0, f64::max);
                println!("{:<17} round-trip error {err:.1e}", form.name());
                for (m, v) in result.frequency_indices().iter().zip(result.values()) {
                    println!("  X({m:>2}) = {:>7.3} {:+7.3}i", v.re, v.im);
                }
            }
            Err(e) => println!("{:<17} {e}", form.name()),
        }
    }

    // A window symmetric about its centre has a real corrected spectrum at any
    // padding, and the padded values are samples of the DTFT.
    let window = [1.0; 8];
    let padded = sdft_zero_padded(&window, 4, 8.0)?;
    let direct = dtft_direct(&DftForm::SymmetricCorrected.signal(&window, 8.0)?, padded.grid())?;
    let worst_imag = padded.iter_unmasked().map(|(_, v)| v.im.abs()).fold(0.0, f64::max);
    let worst_gap =
        padded.iter_unmasked().zip(direct.iter_unmasked()).map(|((_, a), (_, b))| (a - b).norm()).fold(0.0, f64::max);
    println!(
        "padded x4: {} points, max |Im| {worst_imag:.1e}, max |padded - DTFT| {worst_gap:.1e}",
        padded.values().len()
    );
    Ok(())
}
