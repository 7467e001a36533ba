//! Unconditional speech synthesis with an alias-free style-based GAN over
//! audio feature sequences.
//!
//! The crate is organized around the signal path:
//!
//! * [`dsp`] — Kaiser-windowed sinc filter design, resampling, and the
//!   alias-free nonlinearity that keeps every layer bandlimited.
//! * [`features`] — audio ingestion, log-mel extraction, the feature cache,
//!   a synthetic desk-scale dataset, and Griffin-Lim inversion.
//! * [`autodiff`] — a small tape-based reverse-mode engine. Backward passes
//!   are emitted as tape ops, so gradients of gradients (needed for the R1
//!   penalty) come for free.
//! * [`generator`] / [`discriminator`] — the style-based generator and the
//!   convolutional discriminator.
//! * [`training`] — non-saturating GAN losses, R1, EMA, the adaptive
//!   discriminator-skip controller, augmentations, and the training loop.
//! * [`classifier`] — the supervised feature classifier that anchors every
//!   evaluation metric.
//! * [`metrics`] — IS, mIS, FID, AM, latent path length, linear separability.
//! * [`latent`] — W-space projection, style mixing, truncation, and the
//!   derived zero-shot voice-conversion / speech-editing tasks.
//! * [`checkpoint`] / [`config`] — the on-disk container and run configuration.
//!
//! Batch-level and per-item parallelism run on rayon when the default
//! `parallel` feature is enabled; without it every kernel falls back to the
//! same sequential code path with identical results.

pub mod autodiff;
pub mod checkpoint;
pub mod classifier;
pub mod config;
pub mod discriminator;
pub mod dsp;
pub mod error;
pub mod features;
pub mod generator;
pub mod latent;
pub mod metrics;
pub mod nn;
pub mod par;
pub mod training;

pub use error::{Error, Result};
