//! Superposing the even and step windows: the spectrum of the sum equals the
//! sum of the spectra, and the ordinary (causal) window for comparison.

use sampling_ft::experiments::{run_experiment, Experiment, ExperimentConfig};

fn main() -> sampling_ft::Result<()> {
    let table = run_experiment(Experiment::Superposition, &ExperimentConfig::default())?;
    let get = |name| table.series(name).expect(name);
    let sum = get("s1").add(get("s2"))?;
    let gap =
        sum.iter_unmasked().zip(get("s4").iter_unmasked()).map(|((_, a), (_, b))| (a - b).norm()).fold(0.0, f64::max);
    println!("max |S(s1 + s2) - (S(s1) + S(s2))| = {gap:.2e}");
    for name in ["s1", "s2", "s3", "s4"] {
        println!("{name}: peak |S| = {:.3}", get(name).max_abs());
    }
    Ok(())
}
