use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use msfractal::classify::{holdout_evaluate, ClassificationReport, FeatureMatrix, FeatureRow};
use msfractal::descriptors::{descriptor_csv_header, descriptor_csv_row};
use msfractal::extract::{describe_image, ExtractConfig, ImageDescription};
use msfractal::texture_io::{ingest_dataset, load_gray_image, partition_windows};
use rayon::prelude::*;

use crate::config::PipelineConfig;
use crate::error::CliError;

pub const DESCRIPTORS_FILE: &str = "descriptors.csv";
pub const VOLUME_CURVE_FILE: &str = "volume_curve.csv";
pub const FEATURES_FILE: &str = "features.csv";
pub const REPORT_FILE: &str = "report.json";
pub const CONFUSION_FILE: &str = "confusion.csv";

/// Writes every `(name, contents)` pair into `dir`, each through a temporary
/// file renamed into place. Callers build all contents before calling, so a
/// failed command leaves no partial outputs.
pub fn write_outputs(dir: &Path, files: &[(&str, String)]) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(msfractal::Error::from)?;
    let mut written = Vec::with_capacity(files.len());
    for (name, contents) in files {
        let target = dir.join(name);
        let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(msfractal::Error::from)?;
        tmp.write_all(contents.as_bytes()).map_err(msfractal::Error::from)?;
        tmp.persist(&target)
            .map_err(|e| msfractal::Error::from(e.error))?;
        written.push(target);
    }
    Ok(written)
}

#[derive(Debug)]
pub struct DescribeOutcome {
    pub description: ImageDescription,
    pub files: Vec<PathBuf>,
}

impl DescribeOutcome {
    pub fn summary(&self) -> String {
        format!(
            "descriptors: {}\ndimension: {:.6}",
            self.description.descriptors.len(),
            self.description.dimension.dimension
        )
    }
}

pub fn cmd_describe(image: &Path, cfg: &PipelineConfig, out: &Path) -> Result<DescribeOutcome, CliError> {
    cfg.validate()?;
    let img = load_gray_image(image)?;
    let description = describe_image(&img, &cfg.extract_config()?)?;
    let d = &description.descriptors;
    let csv = format!(
        "{}\n{}\n",
        descriptor_csv_header(d.len()),
        descriptor_csv_row(0, 0, &d.values)
    );
    let files = write_outputs(
        out,
        &[
            (DESCRIPTORS_FILE, csv),
            (VOLUME_CURVE_FILE, description.volume_curve.to_csv()),
        ],
    )?;
    Ok(DescribeOutcome { description, files })
}

/// Ingests `root`, splits every image into windows and describes each window.
///
/// Windows of the image with in-class index `s` get sample indices
/// `s * windows_per_image ..`. Rows come out in class order, then sample
/// order, regardless of how the work was scheduled.
pub fn extract_features(
    root: &Path,
    cfg: &PipelineConfig,
    mut progress: impl FnMut(&str),
) -> Result<FeatureMatrix, CliError> {
    cfg.validate()?;
    let extract: ExtractConfig = cfg.extract_config()?;
    let dataset = ingest_dataset(root, cfg.layout)?;
    let per_image = cfg.window_rows * cfg.window_cols;
    let mut rows = Vec::with_capacity(dataset.samples.len() * per_image);
    for (class_id, name) in dataset.class_names.iter().enumerate() {
        let mut jobs = Vec::new();
        for sample in dataset.samples.iter().filter(|s| s.class_id == class_id) {
            let windows = partition_windows(&sample.image, cfg.window_rows, cfg.window_cols)?;
            for (w, window) in windows.into_iter().enumerate() {
                jobs.push((sample.sample_index * per_image + w, window));
            }
        }
        let described = jobs
            .into_par_iter()
            .map(|(sample_index, window)| {
                describe_image(&window, &extract).map(|d| FeatureRow {
                    class_id,
                    sample_index,
                    values: d.descriptors.values,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        progress(&format!(
            "class {}/{} '{}': {} windows",
            class_id + 1,
            dataset.class_count,
            name,
            described.len()
        ));
        rows.extend(described);
    }
    Ok(FeatureMatrix::new(rows)?)
}

pub fn cmd_dataset(
    root: &Path,
    cfg: &PipelineConfig,
    out: &Path,
    progress: impl FnMut(&str),
) -> Result<(FeatureMatrix, PathBuf), CliError> {
    let features = extract_features(root, cfg, progress)?;
    let mut files = write_outputs(out, &[(FEATURES_FILE, features.to_csv())])?;
    Ok((features, files.remove(0)))
}

#[derive(Debug)]
pub struct ClassifyOutcome {
    pub report: ClassificationReport,
    pub label: &'static str,
    pub files: Vec<PathBuf>,
}

impl ClassifyOutcome {
    pub fn summary(&self) -> String {
        self.report.table_row(self.label)
    }
}

fn classify_and_write(features: &FeatureMatrix, cfg: &PipelineConfig, out: &Path, extra: Vec<(&str, String)>) -> Result<ClassifyOutcome, CliError> {
    let report = holdout_evaluate(features, cfg.holdout_fraction, cfg.seed, cfg.ridge_factor)?;
    let mut files = extra;
    files.push((REPORT_FILE, report.to_json()));
    files.push((CONFUSION_FILE, report.confusion_csv()));
    let files = write_outputs(out, &files)?;
    Ok(ClassifyOutcome {
        report,
        label: cfg.method_label(),
        files,
    })
}

pub fn cmd_classify(features_file: &Path, cfg: &PipelineConfig, out: &Path) -> Result<ClassifyOutcome, CliError> {
    cfg.validate()?;
    let text = fs::read_to_string(features_file).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => msfractal::Error::FileNotFound(features_file.to_path_buf()),
        _ => msfractal::Error::from(e),
    })?;
    let features = FeatureMatrix::from_csv(&text)?;
    classify_and_write(&features, cfg, out, Vec::new())
}

/// Ingest, describe, split, fit, predict and report in one run.
pub fn cmd_pipeline(
    root: &Path,
    cfg: &PipelineConfig,
    out: &Path,
    progress: impl FnMut(&str),
) -> Result<ClassifyOutcome, CliError> {
    let features = extract_features(root, cfg, progress)?;
    let csv = features.to_csv();
    classify_and_write(&features, cfg, out, vec![(FEATURES_FILE, csv)])
}
