use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the pipeline can report. [`Error::code`] gives a stable
/// identifier that the command-line front end prints verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("corrupt image: {0}")]
    CorruptImage(String),

    #[error("invalid window grid {rows}x{cols} for a {width}x{height} image")]
    InvalidGrid {
        rows: usize,
        cols: usize,
        width: usize,
        height: usize,
    },

    #[error("no image files found under {}", .0.display())]
    EmptyDataset(PathBuf),

    #[error("unequal samples per class: {}", format_counts(.0))]
    RaggedDataset(Vec<(String, usize)>),

    #[error("padded volume of {voxels} voxels exceeds the cap of {cap}")]
    VolumeTooLarge { voxels: u128, cap: u128 },

    #[error("curve too short: need {needed} samples, have {available}")]
    CurveTooShort { needed: usize, available: usize },

    #[error("degenerate fit: abscissa has zero variance")]
    DegenerateFit,

    #[error("invalid scale parameter {0}")]
    InvalidScale(f64),

    #[error("class {class_id} has {count} sample(s); at least 2 are required")]
    ClassTooSmall { class_id: usize, count: usize },

    #[error("pooled covariance is singular to working precision")]
    SingularCovariance,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid feature: {0}")]
    InvalidFeature(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::FileNotFound(_) => "FileNotFound",
            Error::UnsupportedFormat(_) => "UnsupportedFormat",
            Error::CorruptImage(_) => "CorruptImage",
            Error::InvalidGrid { .. } => "InvalidGrid",
            Error::EmptyDataset(_) => "EmptyDataset",
            Error::RaggedDataset(_) => "RaggedDataset",
            Error::VolumeTooLarge { .. } => "VolumeTooLarge",
            Error::CurveTooShort { .. } => "CurveTooShort",
            Error::DegenerateFit => "DegenerateFit",
            Error::InvalidScale(_) => "InvalidScale",
            Error::ClassTooSmall { .. } => "ClassTooSmall",
            Error::SingularCovariance => "SingularCovariance",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::InvalidFeature(_) => "InvalidFeature",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::Io(_) => "Io",
        }
    }
}

fn format_counts(counts: &[(String, usize)]) -> String {
    counts
        .iter()
        .map(|(name, n)| format!("{name}={n}"))
        .collect::<Vec<_>>()
        .join(", ")
}
