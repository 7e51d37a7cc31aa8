//! Log-log fractality curve, Bouligand-Minkowski dimension and raw descriptors.

use std::fmt::Write as _;
use std::ops::Range;

use crate::bm_edt::VolumeCurve;
use crate::error::{Error, Result};
use crate::multiscale::ScaleSpaceParams;

/// `log(r) -> log(V(r))` sampled at every radius `r > 0` of a volume curve.
#[derive(Clone, Debug, PartialEq)]
pub struct LogLogCurve {
    pub t: Vec<f64>,
    pub v: Vec<f64>,
    /// Always `false`: samples are kept at their native radii.
    pub uniform_t: bool,
}

impl LogLogCurve {
    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimensionEstimate {
    pub dimension: f64,
    pub slope: f64,
    pub intercept: f64,
    pub fit_range: (usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescriptorSource {
    RawMinkowski,
    Multiscale,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DescriptorVector {
    pub values: Vec<f64>,
    pub source: DescriptorSource,
    pub params: Option<ScaleSpaceParams>,
}

impl DescriptorVector {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Header line `class_id,sample_index,d_1,...,d_k`.
pub fn descriptor_csv_header(k: usize) -> String {
    let mut out = String::from("class_id,sample_index");
    for i in 1..=k {
        write!(out, ",d_{i}").unwrap();
    }
    out
}

/// One CSV row. Values use the shortest representation that parses back to
/// the same `f64`.
pub fn descriptor_csv_row(class_id: usize, sample_index: usize, values: &[f64]) -> String {
    let mut out = format!("{class_id},{sample_index}");
    for v in values {
        write!(out, ",{v}").unwrap();
    }
    out
}

pub fn loglog_curve(curve: &VolumeCurve) -> Result<LogLogCurve> {
    if curve.len() < 3 {
        return Err(Error::CurveTooShort {
            needed: 3,
            available: curve.len(),
        });
    }
    let (t, v) = curve
        .sq_radii
        .iter()
        .zip(&curve.volumes)
        .filter(|(&n, _)| n > 0)
        .map(|(&n, &vol)| (0.5 * (n as f64).ln(), (vol as f64).ln()))
        .unzip();
    Ok(LogLogCurve {
        t,
        v,
        uniform_t: false,
    })
}

pub fn estimate_dimension(curve: &LogLogCurve) -> Result<DimensionEstimate> {
    estimate_dimension_in(curve, 0..curve.len())
}

/// Least-squares line through `(t, v)` over `range`; dimension is `3 - slope`.
pub fn estimate_dimension_in(curve: &LogLogCurve, range: Range<usize>) -> Result<DimensionEstimate> {
    if range.end > curve.len() || range.len() < 2 {
        return Err(Error::CurveTooShort {
            needed: range.end.max(range.start + 2),
            available: curve.len(),
        });
    }
    let t = &curve.t[range.clone()];
    let v = &curve.v[range.clone()];
    let n = t.len() as f64;
    let mean_t = t.iter().sum::<f64>() / n;
    let mean_v = v.iter().sum::<f64>() / n;
    let (mut stt, mut stv) = (0.0, 0.0);
    for (&ti, &vi) in t.iter().zip(v) {
        stt += (ti - mean_t) * (ti - mean_t);
        stv += (ti - mean_t) * (vi - mean_v);
    }
    if stt <= f64::EPSILON * n * mean_t.abs().max(1.0) {
        return Err(Error::DegenerateFit);
    }
    let slope = stv / stt;
    let intercept = mean_v - slope * mean_t;
    Ok(DimensionEstimate {
        dimension: 3.0 - slope,
        slope,
        intercept,
        fit_range: (range.start, range.end),
    })
}

/// The first `length` log-volumes, unfiltered.
pub fn raw_descriptors(curve: &LogLogCurve, length: usize) -> Result<DescriptorVector> {
    if length == 0 || length > curve.len() {
        return Err(Error::CurveTooShort {
            needed: length.max(1),
            available: curve.len(),
        });
    }
    Ok(DescriptorVector {
        values: curve.v[..length].to_vec(),
        source: DescriptorSource::RawMinkowski,
        params: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bm_edt::{brute_force_volumes, build_surface};
    use crate::texture_io::GrayImage;

    fn line(slope: f64, c: f64, n: usize) -> LogLogCurve {
        let t: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37 + 0.1).ln()).collect();
        let v = t.iter().map(|&x| slope * x + c).collect();
        LogLogCurve {
            t,
            v,
            uniform_t: false,
        }
    }

    #[test]
    fn drops_radius_zero() {
        let vc = VolumeCurve {
            radii: vec![0.0, 1.0, 2.0],
            sq_radii: vec![0, 1, 4],
            volumes: vec![4, 20, 60],
        };
        let ll = loglog_curve(&vc).unwrap();
        assert_eq!(ll.t, vec![0.0, 2f64.ln()]);
        assert_eq!(ll.v, vec![20f64.ln(), 60f64.ln()]);
    }

    #[test]
    fn single_point_surface_curve() {
        let s = build_surface(&GrayImage::constant(1, 1, 0).unwrap());
        let ll = loglog_curve(&brute_force_volumes(&s, 2f64.sqrt())).unwrap();
        assert_eq!(ll.t.len(), 2);
        assert!((ll.t[1] - 0.5 * 2f64.ln()).abs() < 1e-15);
        assert_eq!(ll.v, vec![7f64.ln(), 19f64.ln()]);
    }

    #[test]
    fn short_curve_rejected() {
        let vc = VolumeCurve {
            radii: vec![0.0, 1.0],
            sq_radii: vec![0, 1],
            volumes: vec![1, 7],
        };
        assert!(matches!(loglog_curve(&vc), Err(Error::CurveTooShort { .. })));
    }

    #[test]
    fn dimension_of_exact_lines() {
        let d = estimate_dimension(&line(1.0, 0.3, 20)).unwrap();
        assert!((d.dimension - 2.0).abs() < 1e-12);
        let d = estimate_dimension(&line(3.0, -2.0, 20)).unwrap();
        assert!(d.dimension.abs() < 1e-12);
        assert!((d.intercept + 2.0).abs() < 1e-12);
        assert_eq!(d.fit_range, (0, 20));
    }

    #[test]
    fn dimension_fit_range() {
        let mut c = line(1.5, 0.0, 10);
        c.v[9] = 100.0;
        let d = estimate_dimension_in(&c, 0..9).unwrap();
        assert!((d.slope - 1.5).abs() < 1e-12);
        assert!(matches!(estimate_dimension_in(&c, 3..4), Err(Error::CurveTooShort { .. })));
    }

    #[test]
    fn degenerate_fit() {
        let c = LogLogCurve {
            t: vec![1.0; 4],
            v: vec![1.0, 2.0, 3.0, 4.0],
            uniform_t: false,
        };
        assert!(matches!(estimate_dimension(&c), Err(Error::DegenerateFit)));
    }

    #[test]
    fn raw_prefix() {
        let c = line(1.0, 0.0, 12);
        assert_eq!(raw_descriptors(&c, 12).unwrap().values, c.v);
        let five = raw_descriptors(&c, 5).unwrap();
        assert_eq!(five.values[..4], raw_descriptors(&c, 4).unwrap().values[..]);
        assert_eq!(five.source, DescriptorSource::RawMinkowski);
        assert!(matches!(raw_descriptors(&c, 0), Err(Error::CurveTooShort { .. })));
        assert!(matches!(raw_descriptors(&c, 13), Err(Error::CurveTooShort { .. })));
    }

    #[test]
    fn csv_rows_round_trip() {
        let vals = [0.1, 1.0 / 3.0, -2.5e-17];
        let row = descriptor_csv_row(3, 7, &vals);
        let parsed: Vec<f64> = row.split(',').skip(2).map(|s| s.parse().unwrap()).collect();
        assert_eq!(parsed, vals);
        assert_eq!(descriptor_csv_header(2), "class_id,sample_index,d_1,d_2");
    }
}
