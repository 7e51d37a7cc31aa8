//! Gray-level image loading, window partitioning and labeled dataset ingestion.

mod codec;
mod dataset;
mod image;

pub use codec::{decode_gray_image, encode_pgm, encode_pgm_ascii, load_gray_image, save_pgm};
pub use dataset::{discover_dataset, ingest_dataset, DatasetLayout, LabeledSample, TextureDataset};
pub use image::{partition_windows, GrayImage};
