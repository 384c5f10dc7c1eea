//! Fourier transforms of Dirac sampling combs, their half-infinite and
//! reversal variants, and symmetric discrete Fourier transforms.
//!
//! The closed forms live in [`combs`], the DFT family in [`transforms`],
//! algebraic checks in [`identities`] and the rectangular-window studies in
//! [`experiments`]. Shared value types are in [`domain`].

// `!(x >= tol)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod combs;
pub mod domain;
pub mod error;
pub mod experiments;
pub mod identities;
pub mod transforms;

pub use domain::{
    Complex, DenseSpectrum, DiscreteSignal, FrequencyGrid, HalfCase, LineSpectrum, ReversalCase, SamplingKind,
    SamplingSpec,
};
pub use error::{Error, Result};
pub use transforms::{DftForm, DftResult};
