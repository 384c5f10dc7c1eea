//! Rebuilds the step-window spectrum as the principal-value convolution of
//! the window transform with the step-sampling transform, then refines the
//! quadrature twice.

use sampling_ft::experiments::{convergence_ladder, run_experiment, Experiment, ExperimentConfig};

fn main() -> sampling_ft::Result<()> {
    let config = ExperimentConfig::default();
    let table = run_experiment(Experiment::Convolution, &config)?;
    let m = table.metrics.expect("convolution table has metrics");
    println!(
        "K = {}, h = {} Hz: correlation {:.6}, relative L2 {:.4}, max |diff| {:.4} over {} points",
        config.truncation_k,
        config.quadrature_step,
        m.pearson_correlation,
        m.relative_l2,
        m.max_abs_diff,
        m.points_compared
    );

    for step in convergence_ladder(&config, 3)? {
        println!(
            "  K = {:>3}, h = {:.4} Hz -> relative L2 {:.3e}",
            step.truncation_k, step.quadrature_step, step.metrics.relative_l2
        );
    }
    Ok(())
}
