//! Exact dilation volumes of an intensity surface.
//!
//! The surface is dilated on the integer lattice. Every lattice point within
//! `r_max` of the surface lies inside the surface bounding box grown by
//! `padding_for(r_max^2)` on all six faces, so counting inside that box is
//! exact. Squared distances stay integral throughout.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::distances::{is_sum_of_three_squares, max_squared_radius, padding_for};
use super::surface::SurfacePointSet;
use crate::error::{Error, Result};

const INF: i64 = i64::MAX / 4;

/// Default cap on the padded lattice size.
pub const DEFAULT_MAX_VOXELS: u64 = 4_000_000_000;

/// Number of lattice points whose squared distance to the surface equals each
/// representable `n <= r_max^2`. Empty shells are kept here with a zero count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellCounts {
    pub counts: BTreeMap<u64, u64>,
}

/// Cumulative dilation volume at each radius with a non-empty shell.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeCurve {
    pub radii: Vec<f64>,
    pub sq_radii: Vec<u64>,
    pub volumes: Vec<u64>,
}

impl VolumeCurve {
    pub fn len(&self) -> usize {
        self.volumes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.volumes.is_empty()
    }

    /// CSV with header `radius,sq_radius,volume`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("radius,sq_radius,volume\n");
        for ((r, n), v) in self.radii.iter().zip(&self.sq_radii).zip(&self.volumes) {
            writeln!(out, "{r:.6},{n},{v}").unwrap();
        }
        out
    }
}

impl ShellCounts {
    fn from_histogram(histogram: &[u64]) -> Self {
        let mut counts = BTreeMap::new();
        for (n, &q) in histogram.iter().enumerate() {
            let n = n as u64;
            if is_sum_of_three_squares(n) {
                counts.insert(n, q);
            } else {
                debug_assert_eq!(q, 0, "lattice distance {n} is not a sum of three squares");
            }
        }
        ShellCounts { counts }
    }

    pub fn volume_curve(&self) -> VolumeCurve {
        let mut curve = VolumeCurve {
            radii: Vec::new(),
            sq_radii: Vec::new(),
            volumes: Vec::new(),
        };
        let mut total = 0u64;
        for (&n, &q) in &self.counts {
            if q == 0 {
                continue;
            }
            total += q;
            curve.radii.push((n as f64).sqrt());
            curve.sq_radii.push(n);
            curve.volumes.push(total);
        }
        curve
    }
}

/// Geometry of the padded lattice around a surface.
#[derive(Clone, Copy, Debug)]
struct PaddedBox {
    pad: usize,
    nx: usize,
    ny: usize,
    nz: usize,
    z0: i64,
}

impl PaddedBox {
    fn new(surface: &SurfacePointSet, max_sq: u64, max_voxels: u64) -> Result<Self> {
        let pad = padding_for(max_sq) as usize;
        let nx = surface.cols() + 2 * pad;
        let ny = surface.rows() + 2 * pad;
        let depth = (surface.max_height() - surface.min_height()) as usize + 1;
        let nz = depth + 2 * pad;
        let voxels = nx as u128 * ny as u128 * nz as u128;
        if voxels > max_voxels as u128 {
            return Err(Error::VolumeTooLarge {
                voxels,
                cap: max_voxels as u128,
            });
        }
        Ok(PaddedBox {
            pad,
            nx,
            ny,
            nz,
            z0: surface.min_height() - pad as i64,
        })
    }
}

/// Lower envelope of parabolas `(x - q)^2 + f[q]` (Meijster et al.), with
/// `INF` entries ignored. Writes `min_q (x - q)^2 + f[q]` into `out`.
fn envelope_1d(f: &[i64], out: &mut [i64], sites: &mut Vec<usize>, starts: &mut Vec<i64>) {
    let n = f.len() as i64;
    sites.clear();
    starts.clear();
    let eval = |x: i64, q: usize| (x - q as i64) * (x - q as i64) + f[q];
    for u in 0..f.len() {
        if f[u] >= INF {
            continue;
        }
        while let (Some(&s), Some(&t)) = (sites.last(), starts.last()) {
            if eval(t, s) > eval(t, u) {
                sites.pop();
                starts.pop();
            } else {
                break;
            }
        }
        match sites.last() {
            None => {
                sites.push(u);
                starts.push(0);
            }
            Some(&s) => {
                let (si, ui) = (s as i64, u as i64);
                let num = ui * ui - si * si + f[u] - f[s];
                let w = 1 + num.div_euclid(2 * (ui - si));
                if w < n {
                    sites.push(u);
                    starts.push(w.max(0));
                }
            }
        }
    }
    if sites.is_empty() {
        out.fill(INF);
        return;
    }
    let mut k = sites.len() - 1;
    for x in (0..f.len()).rev() {
        out[x] = eval(x as i64, sites[k]);
        if k > 0 && x as i64 == starts[k] {
            k -= 1;
        }
    }
}

struct SlabScratch {
    slab: Vec<i64>,
    line: Vec<i64>,
    line_out: Vec<i64>,
    sites: Vec<usize>,
    starts: Vec<i64>,
    histogram: Vec<u64>,
}

impl SlabScratch {
    fn new(bx: &PaddedBox, max_sq: u64) -> Self {
        let longest = bx.nx.max(bx.ny);
        SlabScratch {
            slab: vec![INF; bx.nx * bx.ny],
            line: vec![INF; longest],
            line_out: vec![INF; longest],
            sites: Vec::with_capacity(longest),
            starts: Vec::with_capacity(longest),
            histogram: vec![0; max_sq as usize + 1],
        }
    }
}

/// Squared distance transform of one horizontal slab `z = const` of the
/// padded box, accumulated into the scratch histogram.
fn process_slab(surface: &SurfacePointSet, bx: &PaddedBox, max_sq: u64, k: usize, s: &mut SlabScratch) {
    let z = bx.z0 + k as i64;
    let (nx, ny, pad) = (bx.nx, bx.ny, bx.pad);
    let cap = max_sq as i64;

    // Along the height axis each surface column holds a single point, so the
    // transform reduces to (z - f)^2. Values beyond the radius cannot lead
    // to an in-range distance and are dropped.
    s.slab.fill(INF);
    let mut any = false;
    for row in 0..surface.rows() {
        let base = (row + pad) * nx + pad;
        for col in 0..surface.cols() {
            let dz = z - surface.height(row, col);
            let d = dz * dz;
            if d <= cap {
                s.slab[base + col] = d;
                any = true;
            }
        }
    }
    if !any {
        return;
    }

    // Along columns of the image (x axis); rows in the padding stay INF.
    for row in pad..pad + surface.rows() {
        let line = &mut s.slab[row * nx..(row + 1) * nx];
        s.line[..nx].copy_from_slice(line);
        envelope_1d(&s.line[..nx], line, &mut s.sites, &mut s.starts);
    }

    // Along rows of the image (y axis).
    for x in 0..nx {
        for y in 0..ny {
            s.line[y] = s.slab[y * nx + x];
        }
        envelope_1d(&s.line[..ny], &mut s.line_out[..ny], &mut s.sites, &mut s.starts);
        for y in 0..ny {
            let d = s.line_out[y];
            if d <= cap {
                s.histogram[d as usize] += 1;
            }
        }
    }
}

/// Exact squared-distance histogram of the padded lattice, computed slab by
/// slab with a separable Euclidean distance transform.
pub fn exact_edt_volumes_capped(
    surface: &SurfacePointSet,
    r_max: f64,
    max_voxels: u64,
) -> Result<(ShellCounts, VolumeCurve)> {
    if !(r_max >= 1.0) {
        return Err(Error::InvalidArgument(format!("r_max must be >= 1, got {r_max}")));
    }
    let max_sq = max_squared_radius(r_max);
    let bx = PaddedBox::new(surface, max_sq, max_voxels)?;
    let histogram = (0..bx.nz)
        .into_par_iter()
        .fold(
            || SlabScratch::new(&bx, max_sq),
            |mut scratch, k| {
                process_slab(surface, &bx, max_sq, k, &mut scratch);
                scratch
            },
        )
        .map(|s| s.histogram)
        .reduce(
            || vec![0; max_sq as usize + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let shells = ShellCounts::from_histogram(&histogram);
    let curve = shells.volume_curve();
    Ok((shells, curve))
}

pub fn exact_edt_volumes(surface: &SurfacePointSet, r_max: f64) -> Result<(ShellCounts, VolumeCurve)> {
    exact_edt_volumes_capped(surface, r_max, DEFAULT_MAX_VOXELS)
}

/// Reference implementation: scans every surface point for every lattice
/// point of the padded box. Quadratic; meant for tiny inputs only.
pub fn brute_force_volumes(surface: &SurfacePointSet, r_max: f64) -> VolumeCurve {
    let max_sq = max_squared_radius(r_max);
    let pad = padding_for(max_sq) as i64;
    let points: Vec<(i64, i64, i64)> = surface.points().collect();
    let mut histogram = vec![0u64; max_sq as usize + 1];
    for x in 1 - pad..=surface.rows() as i64 + pad {
        for y in 1 - pad..=surface.cols() as i64 + pad {
            for z in surface.min_height() - pad..=surface.max_height() + pad {
                let best = points
                    .iter()
                    .map(|&(i, j, f)| (x - i).pow(2) + (y - j).pow(2) + (z - f).pow(2))
                    .min()
                    .unwrap_or(i64::MAX);
                if best >= 0 && (best as u64) <= max_sq {
                    histogram[best as usize] += 1;
                }
            }
        }
    }
    ShellCounts::from_histogram(&histogram).volume_curve()
}
