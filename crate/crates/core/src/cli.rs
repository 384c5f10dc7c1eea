//! Command-line front end.
//!
//! Spectral output is a flat table of [`OutputRecord`]s written as CSV
//! (`frequency_hz,frequency_bins,series,re,im,masked`) or a JSON array with
//! the same field names. Masked points have empty `re`/`im` in CSV and `null`
//! in JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 data incompatible with the requested transform.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::combs::{comb_ft_lines, dense_spectrum};
use crate::domain::{
    bins_to_hz, hz_to_bins, DenseSpectrum, FrequencyGrid, HalfCase, LineSpectrum, ReversalCase, SamplingKind,
    SamplingSpec, DEFAULT_TOLERANCE,
};
use crate::error::Error;
use crate::experiments::{run_experiment, ComparisonMetrics, Experiment, ExperimentConfig, CORRELATION_THRESHOLD};
use crate::identities::{comb_doubling_report, run_identity_suite, IdentityReport, RESIDUAL_THRESHOLD};
use crate::transforms::{sdft_zero_padded, transform, DftForm};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sampling-ft", version, about = "Spectra of sampling functions and symmetric DFTs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form spectrum of a sampling function.
    Spectrum(SpectrumArgs),
    /// Ordinary or symmetric DFT of a signal file.
    Dft(DftArgs),
    /// Residuals of the half-infinite transform identities.
    Identities(IdentityArgs),
    /// Rectangular-window experiments.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    Hz,
    Bins,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Odd,
    Shifted,
    Even,
    QuarterForward,
    QuarterBackward,
    OddReversal,
    EvenReversal,
    Half,
    HalfReversal,
    Step,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    kind: KindArg,
    /// Case number for `half` (1-6) and `half-reversal` (1-4).
    #[arg(long)]
    case: Option<u8>,
    /// Shift in sample intervals for `shifted`.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<f64>,
    #[arg(long, default_value_t = 20.0)]
    fs: f64,
    /// Window length defining one bin as `fs / n`.
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    grid_start: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    grid_stop: f64,
    #[arg(long, default_value_t = 0.1)]
    grid_step: f64,
    #[arg(long, value_enum, default_value_t = Units::Bins)]
    units: Units,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Odft,
    SdftOdd,
    SdftEvenLegacy,
    SdftCorrected,
}

impl From<FormArg> for DftForm {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Odft => DftForm::Ordinary,
            FormArg::SdftOdd => DftForm::SymmetricOdd,
            FormArg::SdftEvenLegacy => DftForm::SymmetricEvenLegacy,
            FormArg::SdftCorrected => DftForm::SymmetricCorrected,
        }
    }
}

#[derive(Debug, Args)]
struct DftArgs {
    #[arg(long, value_enum)]
    form: FormArg,
    /// One real sample per line; `#` starts a comment.
    #[arg(long)]
    input: PathBuf,
    /// Zero-padding factor (corrected symmetric form only).
    #[arg(long)]
    pad: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    fs: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExperimentArg {
    Fig6,
    Fig7,
    Fig8,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    which: ExperimentArg,
    #[arg(long, default_value_t = 20.0)]
    fs: f64,
    #[arg(long, default_value_t = 20)]
    n: usize,
    /// Output grid step in bins.
    #[arg(long, default_value_t = 0.1)]
    grid_step: f64,
    /// Convolution truncation, in multiples of `fs`.
    #[arg(long, default_value_t = 25)]
    k: usize,
    /// Quadrature node spacing in bins.
    #[arg(long, default_value_t = 0.01)]
    h: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// One row of spectral output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub frequency_hz: Option<f64>,
    pub frequency_bins: Option<f64>,
    pub series: String,
    pub re: Option<f64>,
    pub im: Option<f64>,
    pub masked: bool,
}

#[derive(Debug, Serialize)]
struct IdentityRow {
    identity: String,
    sample_count: usize,
    max_abs_residual: f64,
    threshold: f64,
    passed: bool,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ParityMismatch { .. } => EXIT_DATA,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure { code: EXIT_USAGE, message: format!("write failed: {e}") }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => cmd_spectrum(&a, out),
        Command::Dft(a) => cmd_dft(&a, out),
        Command::Identities(a) => cmd_identities(&a, out),
        Command::Experiment(a) => cmd_experiment(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn write_table<S: Serialize>(rows: &[S], format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row).map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).map_err(io_failure)?;
            writeln!(out).map_err(io_failure)?;
        }
    }
    Ok(())
}

fn dense_records(
    name: &str,
    spectrum: &DenseSpectrum,
    sample_rate: f64,
    n: usize,
) -> Result<Vec<OutputRecord>, Failure> {
    spectrum
        .values()
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let f = spectrum.grid().point(k);
            Ok(OutputRecord {
                frequency_hz: Some(f),
                frequency_bins: Some(hz_to_bins(f, sample_rate, n)?),
                series: name.to_string(),
                re: v.map(|v| v.re),
                im: v.map(|v| v.im),
                masked: v.is_none(),
            })
        })
        .collect()
}

fn line_records(name: &str, lines: &LineSpectrum, sample_rate: f64, n: usize) -> Result<Vec<OutputRecord>, Failure> {
    lines
        .lines()
        .iter()
        .map(|&(f, w)| {
            Ok(OutputRecord {
                frequency_hz: Some(f),
                frequency_bins: Some(hz_to_bins(f, sample_rate, n)?),
                series: name.to_string(),
                re: Some(w.re),
                im: Some(w.im),
                masked: false,
            })
        })
        .collect()
}

fn summary_records(metrics: &ComparisonMetrics) -> Vec<OutputRecord> {
    [
        ("summary.max_abs_diff", metrics.max_abs_diff),
        ("summary.relative_l2", metrics.relative_l2),
        ("summary.pearson_correlation", metrics.pearson_correlation),
        ("summary.points_compared", metrics.points_compared as f64),
    ]
    .into_iter()
    .map(|(name, value)| OutputRecord {
        frequency_hz: None,
        frequency_bins: None,
        series: name.to_string(),
        re: Some(value),
        im: None,
        masked: false,
    })
    .collect()
}

fn sampling_kind(a: &SpectrumArgs) -> Result<SamplingKind, Failure> {
    let case = || a.case.ok_or_else(|| usage("--case is required for this kind"));
    Ok(match a.kind {
        KindArg::Odd => SamplingKind::Odd,
        KindArg::Shifted => SamplingKind::Shifted(a.r.ok_or_else(|| usage("--r is required for shifted"))?),
        KindArg::Even => SamplingKind::Even,
        KindArg::QuarterForward => SamplingKind::QuarterForward,
        KindArg::QuarterBackward => SamplingKind::QuarterBackward,
        KindArg::OddReversal => SamplingKind::OddReversal,
        KindArg::EvenReversal => SamplingKind::EvenReversal,
        KindArg::Half => SamplingKind::Half(HalfCase::new(case()?)?),
        KindArg::HalfReversal => SamplingKind::HalfReversal(ReversalCase::new(case()?)?),
        KindArg::Step => SamplingKind::Step,
    })
}

fn cmd_spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = SamplingSpec::new(sampling_kind(a)?, a.fs)?;
    let to_hz = |x: f64| -> Result<f64, Failure> {
        Ok(match a.units {
            Units::Hz => x,
            Units::Bins => bins_to_hz(x, a.fs, a.n)?,
        })
    };
    let (start, stop, step) = (to_hz(a.grid_start)?, to_hz(a.grid_stop)?, to_hz(a.grid_step)?);
    let grid = FrequencyGrid::inclusive(start, stop, step)?;
    let name = spec.kind().to_string();
    let records = if spec.kind().is_infinite_comb() {
        let reach = start.abs().max(stop.abs());
        let truncation = (reach / a.fs).ceil() as usize + 1;
        let slack = 1e-9 * reach.max(1.0);
        let lines = comb_ft_lines(&spec, truncation)?.restrict(start - slack, stop + slack);
        line_records(&name, &lines, a.fs, a.n)?
    } else {
        let spectrum = dense_spectrum(&spec, &grid, DEFAULT_TOLERANCE)?;
        dense_records(&name, &spectrum, a.fs, a.n)?
    };
    write_table(&records, a.format, out)?;
    Ok(EXIT_OK)
}

/// One real value per line; anything after `#` is ignored.
pub fn parse_signal(text: &str) -> Result<Vec<f64>, String> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let v: f64 =
            content.parse().map_err(|_| format!("line {}: cannot parse {content:?} as a number", lineno + 1))?;
        if !v.is_finite() {
            return Err(format!("line {}: value must be finite", lineno + 1));
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err("input contains no samples".into());
    }
    Ok(values)
}

fn cmd_dft(a: &DftArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = fs::read_to_string(&a.input).map_err(|e| usage(format!("{}: {e}", a.input.display())))?;
    let x = parse_signal(&text).map_err(usage)?;
    let form = DftForm::from(a.form);
    let n = x.len();
    let records = match a.pad {
        Some(factor) => {
            if form != DftForm::SymmetricCorrected {
                return Err(usage("--pad is only defined for the sdft-corrected form"));
            }
            let spectrum = sdft_zero_padded(&x, factor, a.fs)?;
            dense_records(form.name(), &spectrum, a.fs, n)?
        }
        None => {
            let result = transform(&x, form)?;
            result
                .frequency_indices()
                .iter()
                .zip(result.values())
                .map(|(&m, v)| OutputRecord {
                    frequency_hz: Some(m as f64 * a.fs / n as f64),
                    frequency_bins: Some(m as f64),
                    series: form.name().to_string(),
                    re: Some(v.re),
                    im: Some(v.im),
                    masked: false,
                })
                .collect()
        }
    };
    write_table(&records, a.format, out)?;
    Ok(EXIT_OK)
}

fn identity_row(r: &IdentityReport) -> IdentityRow {
    IdentityRow {
        identity: r.identity.label(),
        sample_count: r.sample_count,
        max_abs_residual: r.max_abs_residual,
        threshold: RESIDUAL_THRESHOLD,
        passed: r.passed(),
    }
}

fn cmd_identities(a: &IdentityArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let samples = usize::try_from(a.samples).map_err(|_| usage("--samples is too large"))?;
    let mut reports = run_identity_suite(a.seed, samples)?;
    reports.push(comb_doubling_report(crate::identities::SUITE_SAMPLE_RATE, crate::combs::DEFAULT_TRUNCATION)?);
    let rows: Vec<IdentityRow> = reports.iter().map(identity_row).collect();
    write_table(&rows, a.format, out)?;
    Ok(if reports.iter().all(IdentityReport::passed) { EXIT_OK } else { EXIT_VERIFICATION })
}

fn cmd_experiment(a: &ExperimentArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let config = ExperimentConfig::from_bins(a.fs, a.n, a.grid_step, a.k, a.h)?;
    let experiment = match a.which {
        ExperimentArg::Fig6 => Experiment::WindowSpectra,
        ExperimentArg::Fig7 => Experiment::Convolution,
        ExperimentArg::Fig8 => Experiment::Superposition,
    };
    let table = run_experiment(experiment, &config)?;
    let mut records = Vec::new();
    for s in &table.series {
        records.extend(dense_records(s.name, &s.spectrum, a.fs, a.n)?);
    }
    let mut code = EXIT_OK;
    if let Some(metrics) = &table.metrics {
        records.extend(summary_records(metrics));
        if !(metrics.pearson_correlation > CORRELATION_THRESHOLD) {
            let _ = writeln!(
                err,
                "verification failed: correlation {} does not exceed {CORRELATION_THRESHOLD}",
                metrics.pearson_correlation
            );
            code = EXIT_VERIFICATION;
        }
    }
    write_table(&records, a.format, out)?;
    Ok(code)
}
