use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::codec::load_gray_image;
use super::image::GrayImage;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DatasetLayout {
    /// `root/<class-name>/<sample>.pgm`
    #[default]
    ClassSubdirectories,
    /// `root/<class-name>_<index>.pgm`
    FilenamePrefix,
}

impl FromStr for DatasetLayout {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "class-subdirectories" => Ok(DatasetLayout::ClassSubdirectories),
            "filename-prefix" => Ok(DatasetLayout::FilenamePrefix),
            other => Err(Error::InvalidArgument(format!("unknown dataset layout '{other}'"))),
        }
    }
}

impl std::fmt::Display for DatasetLayout {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DatasetLayout::ClassSubdirectories => "class-subdirectories",
            DatasetLayout::FilenamePrefix => "filename-prefix",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledSample {
    pub image: GrayImage,
    pub class_id: usize,
    pub sample_index: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TextureDataset {
    pub samples: Vec<LabeledSample>,
    pub class_names: Vec<String>,
    pub class_count: usize,
    pub samples_per_class: usize,
}

fn is_image_file(path: &Path) -> bool {
    path.is_file()
        && path
            .extension()
            .and_then(|e| e.to_str())
            .map(|e| matches!(e.to_ascii_lowercase().as_str(), "pgm" | "png"))
            .unwrap_or(false)
}

fn sorted_entries(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut entries = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<Vec<_>>>()?;
    entries.sort();
    Ok(entries)
}

fn file_name(path: &Path) -> String {
    path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
}

/// Lists image files per class, classes and files both in lexicographic order.
pub fn discover_dataset(root: impl AsRef<Path>, layout: DatasetLayout) -> Result<BTreeMap<String, Vec<PathBuf>>> {
    let root = root.as_ref();
    if !root.is_dir() {
        return Err(Error::FileNotFound(root.to_path_buf()));
    }
    let mut classes: BTreeMap<String, Vec<PathBuf>> = BTreeMap::new();
    match layout {
        DatasetLayout::ClassSubdirectories => {
            for dir in sorted_entries(root)?.into_iter().filter(|p| p.is_dir()) {
                let files: Vec<PathBuf> = sorted_entries(&dir)?
                    .into_iter()
                    .filter(|p| is_image_file(p))
                    .collect();
                if !files.is_empty() {
                    classes.insert(file_name(&dir), files);
                }
            }
        }
        DatasetLayout::FilenamePrefix => {
            for file in sorted_entries(root)?.into_iter().filter(|p| is_image_file(p)) {
                let stem = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default();
                let class = match stem.rsplit_once('_') {
                    Some((class, _)) if !class.is_empty() => class.to_string(),
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "file '{}' does not follow <class>_<index> naming",
                            file_name(&file)
                        )))
                    }
                };
                classes.entry(class).or_default().push(file);
            }
        }
    }
    for files in classes.values_mut() {
        files.sort_by_key(|p| file_name(p));
    }
    if classes.is_empty() {
        return Err(Error::EmptyDataset(root.to_path_buf()));
    }
    let per_class: Vec<usize> = classes.values().map(Vec::len).collect();
    if per_class.iter().any(|&n| n != per_class[0]) {
        return Err(Error::RaggedDataset(
            classes.iter().map(|(k, v)| (k.clone(), v.len())).collect(),
        ));
    }
    Ok(classes)
}

/// Loads every image under `root`, assigning class ids by sorted class name.
pub fn ingest_dataset(root: impl AsRef<Path>, layout: DatasetLayout) -> Result<TextureDataset> {
    let classes = discover_dataset(root, layout)?;
    let samples_per_class = classes.values().next().map(Vec::len).unwrap_or(0);
    let mut samples = Vec::with_capacity(classes.len() * samples_per_class);
    for (class_id, files) in classes.values().enumerate() {
        for (sample_index, path) in files.iter().enumerate() {
            samples.push(LabeledSample {
                image: load_gray_image(path)?,
                class_id,
                sample_index,
            });
        }
    }
    Ok(TextureDataset {
        samples,
        class_count: classes.len(),
        class_names: classes.into_keys().collect(),
        samples_per_class,
    })
}
