//! Influence of sets of variables on Boolean functions.
//!
//! The crate computes the auto-correlation based influence `inf_f(T)`, the
//! pseudo-influence `PI_f(T)` and the classical Ben-Or–Linial,
//! Gangopadhyay–Stănică and Fischer–Blais measures, together with the Walsh
//! and auto-correlation spectra they are built from. Every quantity is an
//! exact rational; floats only appear for Fourier entropy and in rendered
//! reports.
//!
//! Truth tables index assignments with `X_1` as the most significant bit,
//! see [`function`].

pub mod characterizations;
pub mod cli;
pub mod error;
pub mod function;
pub mod geometry;
pub mod influence;
pub mod oracle;
pub mod rational;
pub mod spectra;

pub use error::{Error, Result};
pub use function::{BooleanFunction, VariableSubset};
pub use influence::{InfluenceAlgorithm, InfluenceValue, Measure};
pub use rational::Rational;
pub use spectra::{RealSpectrum, SpectralProfile, WeightDistribution};
