use crate::texture_io::GrayImage;

/// The intensity surface of an image: one lattice point `(i, j, f(i, j))`
/// per pixel, with `f = intensity + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePointSet {
    rows: usize,
    cols: usize,
    heights: Vec<i64>,
    min_height: i64,
    max_height: i64,
}

impl SurfacePointSet {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Height at 0-based `(row, col)`.
    #[inline]
    pub fn height(&self, row: usize, col: usize) -> i64 {
        self.heights[row * self.cols + col]
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn min_height(&self) -> i64 {
        self.min_height
    }

    pub fn max_height(&self) -> i64 {
        self.max_height
    }

    /// Points as 1-based `(i, j, f)` triples, row-major.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        let cols = self.cols;
        self.heights
            .iter()
            .enumerate()
            .map(move |(k, &f)| ((k / cols) as i64 + 1, (k % cols) as i64 + 1, f))
    }
}

pub fn build_surface(image: &GrayImage) -> SurfacePointSet {
    let heights: Vec<i64> = image.pixels().iter().map(|&v| v as i64 + 1).collect();
    SurfacePointSet {
        rows: image.height(),
        cols: image.width(),
        min_height: image.min_intensity() as i64 + 1,
        max_height: image.max_intensity() as i64 + 1,
        heights,
    }
}
