use nalgebra::{Cholesky, DMatrix, DVector};
use rayon::prelude::*;

use super::features::FeatureMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_RIDGE_FACTOR: f64 = 1e-6;

/// Gaussian linear discriminant with a shared (pooled) covariance.
#[derive(Clone, Debug)]
pub struct LdaModel {
    pub class_ids: Vec<usize>,
    pub class_means: Vec<DVector<f64>>,
    /// Pooled within-class covariance after ridge regularization.
    pub pooled_covariance: DMatrix<f64>,
    pub priors: Vec<f64>,
    pub ridge: f64,
    weights: Vec<DVector<f64>>,
    log_priors: Vec<f64>,
}

/// Fits class means and the pooled covariance
/// `S = 1/(n - C) * sum_c sum_{x in c} (x - mu_c)(x - mu_c)^T`,
/// then adds `ridge_factor * trace(S) / d` to the diagonal.
pub fn lda_fit(train: &FeatureMatrix, ridge_factor: f64) -> Result<LdaModel> {
    if !(ridge_factor >= 0.0) || !ridge_factor.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "ridge factor must be a finite value >= 0, got {ridge_factor}"
        )));
    }
    let class_ids = train.class_ids();
    if class_ids.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "LDA needs at least 2 classes, got {}",
            class_ids.len()
        )));
    }
    let d = train.dim();
    let n = train.len();
    let slot = |id: usize| class_ids.binary_search(&id).unwrap();

    let mut sums = vec![DVector::<f64>::zeros(d); class_ids.len()];
    let mut counts = vec![0usize; class_ids.len()];
    for row in train.rows() {
        let c = slot(row.class_id);
        sums[c] += DVector::from_column_slice(&row.values);
        counts[c] += 1;
    }
    let class_means: Vec<DVector<f64>> = sums
        .into_iter()
        .zip(&counts)
        .map(|(s, &k)| s / k as f64)
        .collect();

    let mut scatter = DMatrix::<f64>::zeros(d, d);
    for row in train.rows() {
        let diff = DVector::from_column_slice(&row.values) - &class_means[slot(row.class_id)];
        scatter.ger(1.0, &diff, &diff, 1.0);
    }
    let dof = n.saturating_sub(class_ids.len()).max(1);
    let mut cov = scatter / dof as f64;
    let ridge = ridge_factor * cov.trace() / d as f64;
    for i in 0..d {
        cov[(i, i)] += ridge;
    }

    let chol = Cholesky::new(cov.clone()).ok_or(Error::SingularCovariance)?;
    let l = chol.l_dirty();
    let max_diag = (0..d).map(|i| cov[(i, i)]).fold(0.0, f64::max);
    let tol = 1e3 * d as f64 * f64::EPSILON * max_diag;
    if max_diag <= 0.0 || (0..d).any(|i| l[(i, i)] * l[(i, i)] <= tol) {
        return Err(Error::SingularCovariance);
    }

    let weights: Vec<DVector<f64>> = class_means.iter().map(|mu| chol.solve(mu)).collect();
    let priors: Vec<f64> = counts.iter().map(|&k| k as f64 / n as f64).collect();
    let log_priors = priors.iter().map(|p| p.ln()).collect();
    Ok(LdaModel {
        class_ids,
        class_means,
        pooled_covariance: cov,
        priors,
        ridge,
        weights,
        log_priors,
    })
}

impl LdaModel {
    pub fn dim(&self) -> usize {
        self.pooled_covariance.nrows()
    }

    /// Discriminant scores `x^T S^-1 mu_c - mu_c^T S^-1 mu_c / 2 + ln prior_c`,
    /// in ascending class-id order. Evaluated as `(x - mu_c / 2)^T S^-1 mu_c`
    /// so a point midway between two means scores an exact tie.
    pub fn scores(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: x.len(),
            });
        }
        Ok(self
            .weights
            .iter()
            .zip(&self.class_means)
            .zip(&self.log_priors)
            .map(|((w, mu), lp)| {
                w.iter()
                    .zip(mu.iter())
                    .zip(x)
                    .map(|((wi, mi), xi)| (xi - 0.5 * mi) * wi)
                    .sum::<f64>()
                    + lp
            })
            .collect())
    }

    /// Highest-scoring class; ties go to the lowest class id.
    pub fn predict_one(&self, x: &[f64]) -> Result<usize> {
        let scores = self.scores(x)?;
        let mut best = 0;
        for (c, &s) in scores.iter().enumerate().skip(1) {
            if s > scores[best] {
                best = c;
            }
        }
        Ok(self.class_ids[best])
    }
}

pub fn lda_predict(model: &LdaModel, features: &FeatureMatrix) -> Result<Vec<usize>> {
    if features.dim() != model.dim() {
        return Err(Error::DimensionMismatch {
            expected: model.dim(),
            actual: features.dim(),
        });
    }
    features
        .rows()
        .par_iter()
        .map(|r| model.predict_one(&r.values))
        .collect()
}
