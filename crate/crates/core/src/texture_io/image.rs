use crate::error::{Error, Result};

/// 8-bit gray-level image stored row-major.
///
/// Rows are indexed by `i` in `0..height` and columns by `j` in `0..width`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
    max_intensity: u8,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::CorruptImage(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if pixels.len() != width * height {
            return Err(Error::CorruptImage(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        let max_intensity = pixels.iter().copied().max().unwrap_or(0);
        Ok(GrayImage {
            width,
            height,
            pixels,
            max_intensity,
        })
    }

    /// Builds an image by evaluating `f(row, col)` at every pixel.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width * height);
        for i in 0..height {
            for j in 0..width {
                pixels.push(f(i, j));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn constant(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn max_intensity(&self) -> u8 {
        self.max_intensity
    }

    pub fn min_intensity(&self) -> u8 {
        self.pixels.iter().copied().min().unwrap_or(0)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.pixels[row * self.width + col]
    }

    pub fn transpose(&self) -> GrayImage {
        GrayImage::from_fn(self.height, self.width, |i, j| self.get(j, i))
            .expect("transpose preserves a valid shape")
    }

    /// Copies the `height` x `width` block whose top-left pixel is `(row, col)`.
    pub fn crop(&self, row: usize, col: usize, width: usize, height: usize) -> Result<GrayImage> {
        if row + height > self.height || col + width > self.width {
            return Err(Error::InvalidArgument(format!(
                "crop {width}x{height} at ({row},{col}) exceeds {}x{} image",
                self.width, self.height
            )));
        }
        GrayImage::from_fn(width, height, |i, j| self.get(row + i, col + j))
    }
}

/// Splits `image` into a `rows` x `cols` grid of equal windows.
///
/// Windows are `floor(height/rows)` x `floor(width/cols)` pixels, ordered
/// left-to-right then top-to-bottom. Remainder pixels on the bottom and right
/// edges are dropped.
pub fn partition_windows(image: &GrayImage, rows: usize, cols: usize) -> Result<Vec<GrayImage>> {
    if rows == 0 || cols == 0 || rows > image.height() || cols > image.width() {
        return Err(Error::InvalidGrid {
            rows,
            cols,
            width: image.width(),
            height: image.height(),
        });
    }
    let win_h = image.height() / rows;
    let win_w = image.width() / cols;
    let mut windows = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            windows.push(image.crop(r * win_h, c * win_w, win_w, win_h)?);
        }
    }
    Ok(windows)
}
