//! Spectra of a 20-sample rectangular window under even and step sampling.
//! The even window is real, the step window purely imaginary and odd, and the
//! step window agrees with `-2i sin²(Nθ/2) / sin θ`.

use sampling_ft::experiments::{closed_form_step_spectrum, run_experiment, Experiment, ExperimentConfig};

fn main() -> sampling_ft::Result<()> {
    let config = ExperimentConfig::default();
    let table = run_experiment(Experiment::WindowSpectra, &config)?;
    let s1 = table.series("s1").expect("s1");
    let s2 = table.series("s2").expect("s2");
    println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "bins", "Re s1", "Im s2", "closed", "|diff|");
    for k in (0..config.grid.count()).step_by(10) {
        let f = config.grid.point(k);
        let (a, b) = (s1.get(k).unwrap(), s2.get(k).unwrap());
        let closed = closed_form_step_spectrum(config.window_length, config.sample_rate, f)?;
        let bins = f * config.window_length as f64 / config.sample_rate;
        println!("{bins:>6.1} {:>10.4} {:>10.4} {:>10.4} {:>10.1e}", a.re, b.im, closed.im, (closed - b).norm());
    }
    Ok(())
}
