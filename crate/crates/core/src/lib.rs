//! Multiscale Bouligand-Minkowski fractal descriptors for gray-level textures.
//!
//! The pipeline maps an image onto its intensity surface, counts the exact
//! lattice volume of the surface dilated by balls of every representable
//! radius, takes the log-log curve of volume against radius, and filters it
//! with a derivative-of-Gaussian kernel. The resulting vectors feed a linear
//! discriminant classifier evaluated on a hold-out split.

pub mod bm_edt;
pub mod classify;
pub mod descriptors;
pub mod error;
pub mod extract;
pub mod multiscale;
pub mod synthetic;
pub mod texture_io;

pub use error::{Error, Result};
