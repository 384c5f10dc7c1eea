use sampling_ft::combs::DEFAULT_TRUNCATION;
use sampling_ft::identities::{comb_doubling_report, run_identity_suite, SUITE_SAMPLE_RATE};

fn main() -> sampling_ft::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut reports = run_identity_suite(seed, 1000)?;
    reports.push(comb_doubling_report(SUITE_SAMPLE_RATE, DEFAULT_TRUNCATION)?);
    for r in &reports {
        let verdict = if r.passed() { "ok" } else { "FAIL" };
        println!(
            "{:<18} n={:<5} max residual {:.2e}  {verdict}",
            r.identity.label(),
            r.sample_count,
            r.max_abs_residual
        );
    }
    Ok(())
}
