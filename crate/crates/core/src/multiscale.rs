//! Space-scale filtering of the fractality curve.
//!
//! The curve is convolved with the first derivative of a Gaussian at a single
//! fixed scale, then the filtered signal is truncated after a fixed index to
//! discard the noisy large-radius tail. Samples are indexed uniformly, so the
//! scale is expressed in samples.

use crate::descriptors::{DescriptorSource, DescriptorVector, LogLogCurve};
use crate::error::{Error, Result};

pub const DEFAULT_SCALE: f64 = 0.7;
pub const DEFAULT_THRESHOLD_INDEX: usize = 51;
pub const DEFAULT_RADIUS_FACTOR: f64 = 4.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Boundary {
    Replicate,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaleSpaceParams {
    pub a: f64,
    pub kernel_radius: usize,
    pub boundary: Boundary,
    /// Number of leading filtered samples kept (1-based, inclusive).
    pub threshold_index: usize,
}

impl ScaleSpaceParams {
    pub fn new(a: f64, threshold_index: usize) -> Result<Self> {
        Self::with_radius_factor(a, DEFAULT_RADIUS_FACTOR, threshold_index)
    }

    /// Kernel radius is `ceil(radius_factor * a)`, at least 1.
    pub fn with_radius_factor(a: f64, radius_factor: f64, threshold_index: usize) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::InvalidScale(a));
        }
        if !(radius_factor > 0.0) || !radius_factor.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "kernel radius factor must be positive, got {radius_factor}"
            )));
        }
        if threshold_index == 0 {
            return Err(Error::InvalidArgument("threshold index must be >= 1".into()));
        }
        Ok(ScaleSpaceParams {
            a,
            kernel_radius: ((radius_factor * a).ceil() as usize).max(1),
            boundary: Boundary::Replicate,
            threshold_index,
        })
    }
}

impl Default for ScaleSpaceParams {
    fn default() -> Self {
        Self::new(DEFAULT_SCALE, DEFAULT_THRESHOLD_INDEX).unwrap()
    }
}

/// Samples `g'_a(t) = -t / a^2 * exp(-t^2 / 2a^2) / (a sqrt(2 pi))` at the
/// integer offsets `-radius..=radius`. Negative taps mirror the positive ones
/// exactly, so the kernel is antisymmetric and sums to zero bit for bit.
pub fn gaussian_derivative_kernel(a: f64, radius: usize) -> Result<Vec<f64>> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::InvalidScale(a));
    }
    let norm = 1.0 / (a * (2.0 * std::f64::consts::PI).sqrt());
    let positive: Vec<f64> = (1..=radius)
        .map(|t| {
            let t = t as f64;
            -t / (a * a) * norm * (-t * t / (2.0 * a * a)).exp()
        })
        .collect();
    let mut kernel = Vec::with_capacity(2 * radius + 1);
    kernel.extend(positive.iter().rev().map(|&g| -g));
    kernel.push(0.0);
    kernel.extend_from_slice(&positive);
    Ok(kernel)
}

/// `U(t) = sum_s u(t - s) g'_a(s)` with replicate padding; same length as `u`.
pub fn convolve_replicate(u: &[f64], kernel: &[f64]) -> Vec<f64> {
    let radius = (kernel.len() / 2) as isize;
    let last = u.len() as isize - 1;
    (0..u.len() as isize)
        .map(|t| {
            kernel
                .iter()
                .enumerate()
                .map(|(k, &g)| {
                    let s = k as isize - radius;
                    u[(t - s).clamp(0, last) as usize] * g
                })
                .sum()
        })
        .collect()
}

pub fn scale_transform_signal(u: &[f64], params: &ScaleSpaceParams) -> Result<Vec<f64>> {
    if u.len() < 2 {
        return Err(Error::CurveTooShort {
            needed: 2,
            available: u.len(),
        });
    }
    let kernel = gaussian_derivative_kernel(params.a, params.kernel_radius)?;
    Ok(match params.boundary {
        Boundary::Replicate => convolve_replicate(u, &kernel),
    })
}

/// Filters the log-volume samples of `u` at the single scale `params.a`.
pub fn scale_transform(u: &LogLogCurve, params: &ScaleSpaceParams) -> Result<Vec<f64>> {
    scale_transform_signal(&u.v, params)
}

pub fn proposed_descriptors(u: &LogLogCurve, params: &ScaleSpaceParams) -> Result<DescriptorVector> {
    let mut values = scale_transform(u, params)?;
    values.truncate(params.threshold_index);
    Ok(DescriptorVector {
        values,
        source: DescriptorSource::Multiscale,
        params: Some(*params),
    })
}
