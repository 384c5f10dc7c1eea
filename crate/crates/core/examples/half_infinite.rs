//! Closed-form transforms of the six half-infinite combs and four
//! half-infinite reversal combs, checked against brute-force Cesàro means.

use sampling_ft::combs::{cesaro_oracle, dense_ft, SeriesSpec};
use sampling_ft::{HalfCase, ReversalCase, SamplingKind, SamplingSpec};

fn main() -> sampling_ft::Result<()> {
    let fs = 1.0;
    let f = 0.3;
    let terms = 100_000;
    let kinds = HalfCase::ALL
        .into_iter()
        .map(SamplingKind::Half)
        .chain(ReversalCase::ALL.into_iter().map(SamplingKind::HalfReversal))
        .chain([SamplingKind::Step]);

    println!("f = {f} Hz, f_s = {fs} Hz, Cesàro mean of {terms} partial sums");
    for kind in kinds {
        let spec = SamplingSpec::new(kind, fs)?;
        let closed = dense_ft(&spec, f)?;
        // Step sampling is two-sided, so it has no one-sided oracle.
        let check = SeriesSpec::for_sampling(&spec)
            .and_then(|series| cesaro_oracle(&series, f, terms))
            .map(|summed| format!("{:.2e}", (closed - summed).norm()))
            .unwrap_or_else(|_| "-".into());
        println!("{:<16} {:>9.5} {:+9.5}i   |closed - oracle| = {check}", kind.to_string(), closed.re, closed.im);
    }
    Ok(())
}
