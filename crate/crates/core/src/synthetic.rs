//! Synthetic textures and feature sets for smoke tests and demos.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::classify::{FeatureMatrix, FeatureRow};
use crate::error::{Error, Result};
use crate::texture_io::GrayImage;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TextureKind {
    Constant(u8),
    /// Horizontal ramp spanning the full 8-bit range.
    Ramp,
    /// `128 + amplitude * sin(2 pi x / period) * cos(2 pi y / period)`.
    Sinusoid { period: f64, amplitude: f64 },
    /// Independent uniform intensities in `lo..=hi`.
    Noise { lo: u8, hi: u8 },
}

pub fn texture(kind: TextureKind, width: usize, height: usize, seed: u64) -> Result<GrayImage> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        TextureKind::Constant(v) => GrayImage::constant(width, height, v),
        TextureKind::Ramp => {
            let span = (width.max(2) - 1) as f64;
            GrayImage::from_fn(width, height, |_, j| (255.0 * j as f64 / span).round() as u8)
        }
        TextureKind::Sinusoid { period, amplitude } => {
            let w = 2.0 * std::f64::consts::PI / period;
            GrayImage::from_fn(width, height, |i, j| {
                let v = 128.0 + amplitude * (w * j as f64).sin() * (w * i as f64).cos();
                v.round().clamp(0.0, 255.0) as u8
            })
        }
        TextureKind::Noise { lo, hi } => {
            if lo > hi {
                return Err(Error::InvalidArgument(format!("noise range {lo}..={hi} is empty")));
            }
            GrayImage::from_fn(width, height, |_, _| rng.random_range(lo..=hi))
        }
    }
}

/// Isotropic Gaussian classes with unit variance; class `c` is centred at
/// `separation * e_c`, so distinct means are `separation * sqrt(2)` apart.
pub fn gaussian_classes(
    classes: usize,
    per_class: usize,
    dim: usize,
    separation: f64,
    seed: u64,
) -> Result<FeatureMatrix> {
    if classes > dim {
        return Err(Error::InvalidArgument(format!(
            "{classes} classes need at least {classes} dimensions"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    let mut rows = Vec::with_capacity(classes * per_class);
    for c in 0..classes {
        for s in 0..per_class {
            let mut values: Vec<f64> = (0..dim).map(|_| normal.sample(&mut rng)).collect();
            values[c] += separation;
            rows.push(FeatureRow {
                class_id: c,
                sample_index: s,
                values,
            });
        }
    }
    FeatureMatrix::new(rows)
}
