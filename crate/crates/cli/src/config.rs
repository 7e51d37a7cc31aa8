//! Flat `key = value` pipeline configuration.
//!
//! Precedence is defaults, then the config file, then command-line overrides.
//! Unknown keys are rejected.

use std::fs;
use std::path::Path;

use msfractal::bm_edt::DEFAULT_MAX_VOXELS;
use msfractal::classify::DEFAULT_RIDGE_FACTOR;
use msfractal::extract::{DescriptorMode, ExtractConfig, DEFAULT_R_MAX};
use msfractal::multiscale::{
    ScaleSpaceParams, DEFAULT_RADIUS_FACTOR, DEFAULT_SCALE, DEFAULT_THRESHOLD_INDEX,
};
use msfractal::texture_io::DatasetLayout;

use crate::error::CliError;

pub const KEYS: &[&str] = &[
    "r_max",
    "scale_a",
    "threshold_index",
    "kernel_radius_factor",
    "descriptor_mode",
    "raw_length",
    "holdout_fraction",
    "seed",
    "ridge_factor",
    "window_rows",
    "window_cols",
    "layout",
    "max_voxels",
];

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineConfig {
    pub r_max: f64,
    pub scale_a: f64,
    pub threshold_index: usize,
    pub kernel_radius_factor: f64,
    pub descriptor_mode: DescriptorMode,
    /// Raw-mode descriptor count; 0 keeps the full curve.
    pub raw_length: usize,
    pub holdout_fraction: f64,
    pub seed: u64,
    pub ridge_factor: f64,
    pub window_rows: usize,
    pub window_cols: usize,
    pub layout: DatasetLayout,
    pub max_voxels: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            r_max: DEFAULT_R_MAX,
            scale_a: DEFAULT_SCALE,
            threshold_index: DEFAULT_THRESHOLD_INDEX,
            kernel_radius_factor: DEFAULT_RADIUS_FACTOR,
            descriptor_mode: DescriptorMode::Multiscale,
            raw_length: 0,
            holdout_fraction: 0.5,
            seed: 0,
            ridge_factor: DEFAULT_RIDGE_FACTOR,
            window_rows: 1,
            window_cols: 1,
            layout: DatasetLayout::ClassSubdirectories,
            max_voxels: DEFAULT_MAX_VOXELS,
        }
    }
}

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::InvalidConfig(format!("cannot parse '{value}' for key '{key}'")))
}

impl PipelineConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        match key.trim() {
            "r_max" => self.r_max = parse(key, value)?,
            "scale_a" => self.scale_a = parse(key, value)?,
            "threshold_index" => self.threshold_index = parse(key, value)?,
            "kernel_radius_factor" => self.kernel_radius_factor = parse(key, value)?,
            "descriptor_mode" => self.descriptor_mode = parse(key, value)?,
            "raw_length" => self.raw_length = parse(key, value)?,
            "holdout_fraction" => self.holdout_fraction = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "ridge_factor" => self.ridge_factor = parse(key, value)?,
            "window_rows" => self.window_rows = parse(key, value)?,
            "window_cols" => self.window_cols = parse(key, value)?,
            "layout" => self.layout = parse(key, value)?,
            "max_voxels" => self.max_voxels = parse(key, value)?,
            other => {
                return Err(CliError::InvalidConfig(format!(
                    "unknown key '{other}' (expected one of: {})",
                    KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Applies every `key = value` line of `text`. `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::InvalidConfig(format!("line {}: expected key = value", n + 1))
            })?;
            self.set(key, value)?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => msfractal::Error::FileNotFound(path.to_path_buf()).into(),
            _ => CliError::from(msfractal::Error::from(e)),
        })?;
        let mut cfg = Self::default();
        cfg.apply_text(&text)?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::InvalidConfig(m));
        if !(self.r_max >= 1.0) || !self.r_max.is_finite() {
            return bad(format!("r_max must be >= 1, got {}", self.r_max));
        }
        if !(self.holdout_fraction > 0.0 && self.holdout_fraction < 1.0) {
            return bad(format!("holdout_fraction must lie in (0, 1), got {}", self.holdout_fraction));
        }
        if !(self.ridge_factor >= 0.0) || !self.ridge_factor.is_finite() {
            return bad(format!("ridge_factor must be >= 0, got {}", self.ridge_factor));
        }
        if self.window_rows == 0 || self.window_cols == 0 {
            return bad("window grid must be at least 1x1".into());
        }
        self.scale_params()?;
        Ok(())
    }

    pub fn scale_params(&self) -> Result<ScaleSpaceParams, CliError> {
        ScaleSpaceParams::with_radius_factor(
            self.scale_a,
            self.kernel_radius_factor,
            self.threshold_index,
        )
        .map_err(|e| CliError::InvalidConfig(e.to_string()))
    }

    pub fn extract_config(&self) -> Result<ExtractConfig, CliError> {
        Ok(ExtractConfig {
            r_max: self.r_max,
            mode: self.descriptor_mode,
            raw_length: (self.raw_length > 0).then_some(self.raw_length),
            scale: self.scale_params()?,
            max_voxels: self.max_voxels,
        })
    }

    /// Row label in the printed results table.
    pub fn method_label(&self) -> &'static str {
        match self.descriptor_mode {
            DescriptorMode::RawMinkowski => "Minkowski",
            DescriptorMode::Multiscale => "Proposed",
        }
    }
}
