use std::collections::BTreeSet;

use crate::descriptors::{descriptor_csv_header, descriptor_csv_row};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FeatureRow {
    pub class_id: usize,
    pub sample_index: usize,
    pub values: Vec<f64>,
}

/// Labeled feature vectors of one common dimension, all finite.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMatrix {
    rows: Vec<FeatureRow>,
    dim: usize,
}

impl FeatureMatrix {
    pub fn new(rows: Vec<FeatureRow>) -> Result<Self> {
        let dim = rows
            .first()
            .map(|r| r.values.len())
            .ok_or_else(|| Error::InvalidFeature("feature matrix has no rows".into()))?;
        if dim == 0 {
            return Err(Error::InvalidFeature("feature vectors are empty".into()));
        }
        for r in &rows {
            if r.values.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: r.values.len(),
                });
            }
            if let Some(v) = r.values.iter().find(|v| !v.is_finite()) {
                return Err(Error::InvalidFeature(format!(
                    "non-finite value {v} in sample ({}, {})",
                    r.class_id, r.sample_index
                )));
            }
        }
        Ok(FeatureMatrix { rows, dim })
    }

    pub fn rows(&self) -> &[FeatureRow] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<FeatureRow> {
        self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.class_id).collect()
    }

    /// Distinct class ids, ascending.
    pub fn class_ids(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.class_id)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `max class_id + 1`.
    pub fn class_count(&self) -> usize {
        self.rows.iter().map(|r| r.class_id + 1).max().unwrap_or(0)
    }

    pub fn to_csv(&self) -> String {
        let mut out = descriptor_csv_header(self.dim);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&descriptor_csv_row(r.class_id, r.sample_index, &r.values));
            out.push('\n');
        }
        out
    }

    /// Parses `class_id,sample_index,d_1,...,d_k` rows after a header line.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        match lines.next() {
            Some((_, h)) if h.starts_with("class_id,sample_index") => {}
            _ => {
                return Err(Error::InvalidFeature(
                    "missing header 'class_id,sample_index,d_1,...'".into(),
                ))
            }
        }
        let mut rows = Vec::new();
        for (lineno, line) in lines {
            let bad = |what: &str| Error::InvalidFeature(format!("line {}: {what}", lineno + 1));
            let mut fields = line.split(',').map(str::trim);
            let class_id = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad class_id"))?;
            let sample_index = fields
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| bad("bad sample_index"))?;
            let values = fields
                .map(|s| s.parse::<f64>().map_err(|_| bad(&format!("bad value '{s}'"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(FeatureRow {
                class_id,
                sample_index,
                values,
            });
        }
        Self::new(rows)
    }
}
