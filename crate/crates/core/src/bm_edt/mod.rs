//! Intensity surfaces and their exact Euclidean dilation volumes.

mod distances;
mod surface;
mod volume;

pub use distances::{
    is_sum_of_three_squares, max_squared_radius, padding_for, representable_distances, DistanceSet,
};
pub use surface::{build_surface, SurfacePointSet};
pub use volume::{
    brute_force_volumes, exact_edt_volumes, exact_edt_volumes_capped, ShellCounts, VolumeCurve,
    DEFAULT_MAX_VOXELS,
};
