use thiserror::Error;

/// Errors produced by the spectral toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value: {0}")]
    NonFinite(&'static str),

    #[error("sample rate must be positive and finite, got {0}")]
    InvalidSampleRate(f64),

    #[error("invalid {family} case {case}")]
    InvalidCase { family: &'static str, case: u8 },

    #[error("input is empty")]
    EmptyInput,

    #[error("length {len} is incompatible with the {form} form (needs {expected} N)")]
    ParityMismatch { form: &'static str, expected: &'static str, len: usize },

    #[error("frequency {frequency} Hz is singular for this closed form")]
    SingularFrequency { frequency: f64 },

    #[error("invalid frequency grid: {0}")]
    InvalidGrid(String),

    #[error("invalid time window [{t_min}, {t_max}]")]
    InvalidWindow { t_min: f64, t_max: f64 },

    #[error("{0} has no line spectrum")]
    NoLineSpectrum(&'static str),

    #[error("series must be one-sided for summation")]
    NotOneSided,

    #[error("at least {min} terms are required, got {got}")]
    TooFewTerms { min: usize, got: usize },

    #[error("spectra are tabulated on different grids")]
    GridMismatch,

    #[error("quadrature nodes collide with singularities: {0}")]
    NodeCollision(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid signal: {0}")]
    InvalidSignal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
