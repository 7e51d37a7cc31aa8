//! Command-line orchestration: describe single images, extract dataset
//! features, classify feature files, or run the whole pipeline.

pub mod commands;
pub mod config;
pub mod error;

pub use commands::{cmd_classify, cmd_dataset, cmd_describe, cmd_pipeline, extract_features};
pub use config::PipelineConfig;
pub use error::CliError;
