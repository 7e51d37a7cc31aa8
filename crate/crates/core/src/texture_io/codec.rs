//! Raster decoding and encoding.
//!
//! PGM (`P2` ASCII and `P5` binary) is the primary format. 8-bit grayscale
//! PNG is accepted on input. Color rasters are rejected rather than
//! converted.

use std::fs;
use std::io::{Cursor, Write};
use std::path::Path;

use super::image::GrayImage;
use crate::error::{Error, Result};

const PNG_MAGIC: &[u8] = b"\x89PNG\r\n\x1a\n";

pub fn load_gray_image(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::FileNotFound(path.to_path_buf()))
        }
        Err(e) => return Err(e.into()),
    };
    decode_gray_image(&bytes)
}

/// Decodes a PGM or grayscale PNG held in memory.
pub fn decode_gray_image(bytes: &[u8]) -> Result<GrayImage> {
    if bytes.starts_with(PNG_MAGIC) {
        return decode_png(bytes);
    }
    match bytes.get(..2) {
        Some(b"P2") => decode_pgm(bytes, false),
        Some(b"P5") => decode_pgm(bytes, true),
        Some(b"P3") | Some(b"P6") => Err(Error::UnsupportedFormat(
            "color PPM input is not supported".into(),
        )),
        _ => Err(Error::UnsupportedFormat(
            "expected a PGM (P2/P5) or grayscale PNG file".into(),
        )),
    }
}

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn next_uint(&mut self) -> Result<Option<usize>> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.bytes.get(self.pos) {
                None => Ok(None),
                Some(_) => Err(Error::CorruptImage(format!(
                    "unexpected byte at offset {} in PGM",
                    self.pos
                ))),
            };
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map(Some)
            .ok_or_else(|| Error::CorruptImage("integer overflow in PGM".into()))
    }

    fn header_uint(&mut self, what: &str) -> Result<usize> {
        self.next_uint()?
            .ok_or_else(|| Error::CorruptImage(format!("PGM header is missing the {what}")))
    }
}

fn decode_pgm(bytes: &[u8], binary: bool) -> Result<GrayImage> {
    let mut cur = HeaderCursor { bytes, pos: 2 };
    let width = cur.header_uint("width")?;
    let height = cur.header_uint("height")?;
    let maxval = cur.header_uint("maxval")?;
    if maxval == 0 || maxval > 255 {
        return Err(Error::UnsupportedFormat(format!(
            "PGM maxval {maxval} is outside the 8-bit range"
        )));
    }
    let count = width
        .checked_mul(height)
        .ok_or_else(|| Error::CorruptImage("PGM dimensions overflow".into()))?;

    let pixels = if binary {
        // exactly one whitespace byte separates maxval from the raster
        match bytes.get(cur.pos) {
            Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
            _ => return Err(Error::CorruptImage("missing raster separator".into())),
        }
        let raster = &bytes[cur.pos..];
        if raster.len() < count {
            return Err(Error::CorruptImage(format!(
                "header declares {width}x{height} ({count} pixels) but only {} bytes follow",
                raster.len()
            )));
        }
        raster[..count].to_vec()
    } else {
        let mut pixels = Vec::with_capacity(count);
        while let Some(v) = cur.next_uint()? {
            pixels.push(v);
        }
        if pixels.len() != count {
            return Err(Error::CorruptImage(format!(
                "header declares {count} pixels but {} values follow",
                pixels.len()
            )));
        }
        pixels.into_iter().map(|v| v as u8).collect()
    };
    if let Some(&v) = pixels.iter().find(|&&v| v as usize > maxval) {
        return Err(Error::CorruptImage(format!(
            "pixel value {v} exceeds maxval {maxval}"
        )));
    }
    GrayImage::new(width, height, pixels)
}

fn decode_png(bytes: &[u8]) -> Result<GrayImage> {
    let corrupt = |e: png::DecodingError| Error::CorruptImage(e.to_string());
    let decoder = png::Decoder::new(Cursor::new(bytes));
    let mut reader = decoder.read_info().map_err(corrupt)?;
    let info = reader.info();
    if info.color_type != png::ColorType::Grayscale {
        return Err(Error::UnsupportedFormat(format!(
            "PNG color type {:?} is not plain grayscale",
            info.color_type
        )));
    }
    if info.bit_depth != png::BitDepth::Eight {
        return Err(Error::UnsupportedFormat(format!(
            "PNG bit depth {:?} is not 8-bit",
            info.bit_depth
        )));
    }
    let (width, height) = (info.width as usize, info.height as usize);
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| Error::CorruptImage("PNG too large".into()))?;
    let mut buf = vec![0u8; size];
    let frame = reader.next_frame(&mut buf).map_err(corrupt)?;
    let stride = frame.line_size;
    let mut pixels = Vec::with_capacity(width * height);
    for row in buf.chunks(stride).take(height) {
        pixels.extend_from_slice(&row[..width]);
    }
    GrayImage::new(width, height, pixels)
}

/// Binary `P5` encoding with maxval 255.
pub fn encode_pgm(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend_from_slice(image.pixels());
    out
}

/// ASCII `P2` encoding with maxval 255, one image row per line.
pub fn encode_pgm_ascii(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P2\n{} {}\n255\n", image.width(), image.height());
    for row in image.pixels().chunks(image.width()) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

pub fn save_pgm(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(&encode_pgm(image))?;
    Ok(())
}
