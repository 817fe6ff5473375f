//! Learning ambiguous targets with a pair of coupled networks.
//!
//! A target that depends on hidden variables is a random function of the
//! observed inputs: identical inputs can carry different outcomes. One
//! network trained online on such data settles on the conditional mean;
//! a second network, trained on the magnitude of the first one's residuals
//! after the first has finished, settles on the expected error. Together
//! they turn a point prediction into a band `value ± delta`.
//!
//! The crate provides:
//!
//! - [`nn`]: the sigmoid feedforward network and its online training step;
//! - [`twin`]: the two-phase trainer, band prediction and effective error;
//! - [`straw`]: a straw-chamber Monte Carlo whose left-right ambiguity is
//!   the canonical source of such data;
//! - [`data`]: synthetic two-point mixtures and the credit-scoring pipeline;
//! - [`metrics`]: histograms, moments, rank correlation and evaluation;
//! - [`report`]: CSV/plot-data output for evaluation runs.

pub mod data;
pub mod error;
pub mod metrics;
pub mod nn;
pub mod report;
pub mod straw;
pub mod twin;

pub use error::{Error, Result};
pub use nn::{LearningSchedule, Mlp, NetConfig, Sample};
pub use twin::{
    IndexSampler, PredictionBand, TargetCodec, TrainPlan, TwinModel, TwinTrainer,
    UncertaintyMode, UniformSampler,
};
