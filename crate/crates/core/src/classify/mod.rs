//! Linear discriminant classification, stratified hold-out and agreement
//! statistics.

mod features;
mod lda;
mod metrics;
mod split;

pub use features::{FeatureMatrix, FeatureRow};
pub use lda::{lda_fit, lda_predict, LdaModel, DEFAULT_RIDGE_FACTOR};
pub use metrics::{evaluate, ClassificationReport};
pub use split::holdout_split;

use crate::error::Result;

/// Split, fit, predict and score in one call.
pub fn holdout_evaluate(
    features: &FeatureMatrix,
    fraction: f64,
    seed: u64,
    ridge_factor: f64,
) -> Result<ClassificationReport> {
    let (train, test) = holdout_split(features, fraction, seed)?;
    let model = lda_fit(&train, ridge_factor)?;
    let predicted = lda_predict(&model, &test)?;
    evaluate(&test.labels(), &predicted, features.class_count(), features.dim())
}
