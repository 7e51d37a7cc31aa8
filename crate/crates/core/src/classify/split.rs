use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::features::FeatureMatrix;
use crate::error::{Error, Result};

/// Stratified hold-out split.
///
/// Each class contributes `floor(fraction * n_c)` samples to the training
/// set (clamped so both halves get at least one), chosen by a shuffle seeded
/// with `seed`. Both halves keep the input row order.
pub fn holdout_split(features: &FeatureMatrix, fraction: f64, seed: u64) -> Result<(FeatureMatrix, FeatureMatrix)> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "hold-out fraction must lie in (0, 1), got {fraction}"
        )));
    }
    let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (idx, row) in features.rows().iter().enumerate() {
        by_class.entry(row.class_id).or_default().push(idx);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_train = vec![false; features.len()];
    for (&class_id, indices) in &by_class {
        let n = indices.len();
        if n < 2 {
            return Err(Error::ClassTooSmall { class_id, count: n });
        }
        let k = ((fraction * n as f64).floor() as usize).clamp(1, n - 1);
        let mut shuffled = indices.clone();
        shuffled.shuffle(&mut rng);
        for &i in &shuffled[..k] {
            in_train[i] = true;
        }
    }
    let (mut train, mut test) = (Vec::new(), Vec::new());
    for (row, &t) in features.rows().iter().zip(&in_train) {
        if t {
            train.push(row.clone());
        } else {
            test.push(row.clone());
        }
    }
    Ok((FeatureMatrix::new(train)?, FeatureMatrix::new(test)?))
}
