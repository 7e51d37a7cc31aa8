//! Image-to-descriptor glue used by the command-line pipeline.

use std::str::FromStr;

use crate::bm_edt::{build_surface, exact_edt_volumes_capped, VolumeCurve, DEFAULT_MAX_VOXELS};
use crate::descriptors::{
    estimate_dimension, loglog_curve, raw_descriptors, DescriptorVector, DimensionEstimate,
    LogLogCurve,
};
use crate::error::{Error, Result};
use crate::multiscale::{proposed_descriptors, ScaleSpaceParams};
use crate::texture_io::GrayImage;

pub const DEFAULT_R_MAX: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DescriptorMode {
    RawMinkowski,
    #[default]
    Multiscale,
}

impl DescriptorMode {
    pub fn label(&self) -> &'static str {
        match self {
            DescriptorMode::RawMinkowski => "raw-minkowski",
            DescriptorMode::Multiscale => "multiscale",
        }
    }
}

impl FromStr for DescriptorMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw-minkowski" => Ok(DescriptorMode::RawMinkowski),
            "multiscale" => Ok(DescriptorMode::Multiscale),
            other => Err(Error::InvalidArgument(format!("unknown descriptor mode '{other}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExtractConfig {
    pub r_max: f64,
    pub mode: DescriptorMode,
    /// Raw-mode prefix length; `None` keeps the whole curve.
    pub raw_length: Option<usize>,
    pub scale: ScaleSpaceParams,
    pub max_voxels: u64,
}

impl Default for ExtractConfig {
    fn default() -> Self {
        ExtractConfig {
            r_max: DEFAULT_R_MAX,
            mode: DescriptorMode::default(),
            raw_length: None,
            scale: ScaleSpaceParams::default(),
            max_voxels: DEFAULT_MAX_VOXELS,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ImageDescription {
    pub volume_curve: VolumeCurve,
    pub loglog: LogLogCurve,
    pub dimension: DimensionEstimate,
    pub descriptors: DescriptorVector,
}

pub fn describe_image(image: &GrayImage, config: &ExtractConfig) -> Result<ImageDescription> {
    let surface = build_surface(image);
    let (_, volume_curve) = exact_edt_volumes_capped(&surface, config.r_max, config.max_voxels)?;
    let loglog = loglog_curve(&volume_curve)?;
    let dimension = estimate_dimension(&loglog)?;
    let descriptors = match config.mode {
        DescriptorMode::RawMinkowski => {
            raw_descriptors(&loglog, config.raw_length.unwrap_or(loglog.len()))?
        }
        DescriptorMode::Multiscale => proposed_descriptors(&loglog, &config.scale)?,
    };
    Ok(ImageDescription {
        volume_curve,
        loglog,
        dimension,
        descriptors,
    })
}
