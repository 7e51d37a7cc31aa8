use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Confusion matrix (rows actual, columns predicted) with summary scores.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub correctness_rate: f64,
    pub kappa: f64,
    pub descriptor_count: usize,
    pub confusion: Vec<Vec<u64>>,
}

pub fn evaluate(
    actual: &[usize],
    predicted: &[usize],
    class_count: usize,
    descriptor_count: usize,
) -> Result<ClassificationReport> {
    if actual.len() != predicted.len() {
        return Err(Error::LengthMismatch(actual.len(), predicted.len()));
    }
    if actual.is_empty() {
        return Err(Error::InvalidArgument("no samples to evaluate".into()));
    }
    let mut confusion = vec![vec![0u64; class_count]; class_count];
    for (&a, &p) in actual.iter().zip(predicted) {
        if a >= class_count || p >= class_count {
            return Err(Error::InvalidArgument(format!(
                "class id {} out of range for {class_count} classes",
                a.max(p)
            )));
        }
        confusion[a][p] += 1;
    }
    let (correctness_rate, kappa) = agreement(&confusion);
    Ok(ClassificationReport {
        correctness_rate,
        kappa,
        descriptor_count,
        confusion,
    })
}

/// Observed agreement and Cohen's kappa. Kappa is computed from integer
/// margins as `(n * trace - sum_c r_c k_c) / (n^2 - sum_c r_c k_c)`.
/// When chance agreement is already 1 (a single class on both sides) kappa
/// is 1 for perfect agreement.
fn agreement(confusion: &[Vec<u64>]) -> (f64, f64) {
    let c = confusion.len();
    let n: u128 = confusion.iter().flatten().map(|&x| x as u128).sum();
    let trace: u128 = (0..c).map(|i| confusion[i][i] as u128).sum();
    let chance: u128 = (0..c)
        .map(|i| {
            let row: u128 = confusion[i].iter().map(|&x| x as u128).sum();
            let col: u128 = confusion.iter().map(|r| r[i] as u128).sum();
            row * col
        })
        .sum();
    let p_o = trace as f64 / n as f64;
    let num = (n * trace) as f64 - chance as f64;
    let den = (n * n) as f64 - chance as f64;
    let kappa = if den == 0.0 {
        if trace == n {
            1.0
        } else {
            0.0
        }
    } else {
        num / den
    };
    (p_o, kappa)
}

impl ClassificationReport {
    pub fn total(&self) -> u64 {
        self.confusion.iter().flatten().sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Plain integer grid, one actual class per line.
    pub fn confusion_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.confusion {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    /// `label  correctness%  kappa  descriptors`, four decimals.
    pub fn table_row(&self, label: &str) -> String {
        format!(
            "{label:<14} {:>9.4} {:>7.4} {:>5}",
            100.0 * self.correctness_rate,
            self.kappa,
            self.descriptor_count
        )
    }
}
