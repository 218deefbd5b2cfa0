//! Point sets, sampling windows, metrics, and synthetic scene generators.

mod io;
mod scenes;

pub use io::{load_csv, save_csv, save_labels};
pub use scenes::{generate_scene, SceneBuilder, SCENE_NAMES};

use rand::Rng;
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::rng::rng_from;
use crate::{McfError, Result};

/// Label value marking a point as noise / unclustered.
pub const NOISE_LABEL: i32 = -1;

/// A finite set of points in `R^dim`, optionally carrying ground-truth
/// labels (`-1` = noise). Coordinates are stored flat, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    coords: Vec<f64>,
    dim: usize,
    labels: Option<Vec<i32>>,
}

impl PointSet {
    /// Empty set of the given dimension.
    pub fn new(dim: usize) -> Self {
        Self {
            coords: Vec::new(),
            dim,
            labels: None,
        }
    }

    /// Build from one row per point. All rows must share the same dimension.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for row in rows {
            if row.len() != dim {
                return Err(McfError::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            coords.extend_from_slice(row);
        }
        Ok(Self {
            coords,
            dim,
            labels: None,
        })
    }

    /// Attach ground-truth labels (`-1` = noise).
    pub fn with_labels(mut self, labels: Vec<i32>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(McfError::LabelLengthMismatch {
                labels: labels.len(),
                points: self.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.coords.len() / self.dim
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim.max(1))
    }

    pub fn labels(&self) -> Option<&[i32]> {
        self.labels.as_deref()
    }

    /// Append a point; panics on dimension mismatch (internal builder use).
    pub fn push(&mut self, p: &[f64]) {
        assert_eq!(p.len(), self.dim, "point dimension mismatch");
        self.coords.extend_from_slice(p);
        if let Some(labels) = &mut self.labels {
            labels.push(NOISE_LABEL);
        }
    }

    /// Subset by point indices; labels, when present, follow along.
    pub fn select(&self, indices: &[u32]) -> Self {
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            coords.extend_from_slice(self.point(i as usize));
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| indices.iter().map(|&i| l[i as usize]).collect());
        Self {
            coords,
            dim: self.dim,
            labels,
        }
    }
}

// Serialized as {"dim": d, "points": [[..], ..], "labels": [..] | null} so
// traces stay human-readable.
impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PointSet", 3)?;
        s.serialize_field("dim", &self.dim)?;
        let rows: Vec<&[f64]> = self.points().collect();
        s.serialize_field("points", &rows)?;
        s.serialize_field("labels", &self.labels)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PointSet;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a PointSet map")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<PointSet, A::Error> {
                let mut dim: Option<usize> = None;
                let mut rows: Option<Vec<Vec<f64>>> = None;
                let mut labels: Option<Option<Vec<i32>>> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "dim" => dim = Some(map.next_value()?),
                        "points" => rows = Some(map.next_value()?),
                        "labels" => labels = Some(map.next_value()?),
                        _ => {
                            let _: de::IgnoredAny = map.next_value()?;
                        }
                    }
                }
                let dim = dim.ok_or_else(|| de::Error::missing_field("dim"))?;
                let rows = rows.ok_or_else(|| de::Error::missing_field("points"))?;
                let mut ps = PointSet::new(dim);
                for row in &rows {
                    if row.len() != dim {
                        return Err(de::Error::custom("row dimension mismatch"));
                    }
                    ps.coords.extend_from_slice(row);
                }
                if let Some(Some(l)) = labels {
                    ps = ps.with_labels(l).map_err(de::Error::custom)?;
                }
                Ok(ps)
            }
        }
        deserializer.deserialize_struct("PointSet", &["dim", "points", "labels"], V)
    }
}

/// Axis-aligned sampling window (hyper-rectangle).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Window {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(McfError::DimensionMismatch {
                expected: lo.len(),
                got: hi.len(),
            });
        }
        for (a, b) in lo.iter().zip(&hi) {
            if !(a <= b) {
                return Err(McfError::InvalidParameter(format!(
                    "window bound lo={a} exceeds hi={b}"
                )));
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn volume(&self) -> f64 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| b - a)
            .product()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim()
            && p.iter()
                .zip(self.lo.iter().zip(&self.hi))
                .all(|(x, (a, b))| *a <= *x && *x <= *b)
    }
}

/// Distance function on coordinate vectors. Implementations must be
/// symmetric, non-negative, and zero on identical inputs.
pub trait Metric: Sync {
    fn distance(&self, a: &[f64], b: &[f64]) -> f64;
}

/// The default metric.
#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean;

impl Metric for Euclidean {
    #[inline]
    fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        let mut s = 0.0;
        for i in 0..a.len() {
            let d = a[i] - b[i];
            s += d * d;
        }
        s.sqrt()
    }
}

/// Smallest axis-aligned box containing every point of `ps`.
///
/// Errors on an empty set.
pub fn bounding_window(ps: &PointSet) -> Result<Window> {
    if ps.is_empty() {
        return Err(McfError::EmptyDataset);
    }
    let dim = ps.dim();
    let mut lo = vec![f64::INFINITY; dim];
    let mut hi = vec![f64::NEG_INFINITY; dim];
    for p in ps.points() {
        for k in 0..dim {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    Window::new(lo, hi)
}

/// Draw `n` i.i.d. uniform points in `w`. Deterministic given `seed`;
/// degenerate axes (lo == hi) produce constant coordinates.
pub fn generate_uniform(n: usize, w: &Window, seed: u64) -> PointSet {
    let mut rng = rng_from(seed);
    let mut ps = PointSet::new(w.dim());
    let mut buf = vec![0.0; w.dim()];
    for _ in 0..n {
        for k in 0..w.dim() {
            let u: f64 = rng.random();
            buf[k] = w.lo[k] + u * (w.hi[k] - w.lo[k]);
        }
        ps.push(&buf);
    }
    ps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounding_window_two_points() {
        let ps = PointSet::from_rows(&[vec![0.0, 0.0], vec![1.0, 2.0]]).unwrap();
        let w = bounding_window(&ps).unwrap();
        assert_eq!(w.lo, vec![0.0, 0.0]);
        assert_eq!(w.hi, vec![1.0, 2.0]);
    }

    #[test]
    fn bounding_window_single_point_is_degenerate() {
        let ps = PointSet::from_rows(&[vec![3.0, 3.0]]).unwrap();
        let w = bounding_window(&ps).unwrap();
        assert_eq!(w.lo, w.hi);
        assert_eq!(w.volume(), 0.0);
    }

    #[test]
    fn bounding_window_empty_errors() {
        let ps = PointSet::new(2);
        assert!(matches!(bounding_window(&ps), Err(McfError::EmptyDataset)));
    }

    #[test]
    fn uniform_zero_points() {
        let w = Window::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let ps = generate_uniform(0, &w, 1);
        assert!(ps.is_empty());
    }

    #[test]
    fn uniform_points_stay_in_window_and_average_out() {
        let w = Window::new(vec![0.0, 0.0], vec![1.0, 1.0]).unwrap();
        let ps = generate_uniform(1000, &w, 42);
        assert_eq!(ps.len(), 1000);
        let mut mean = [0.0; 2];
        for p in ps.points() {
            assert!(w.contains(p));
            mean[0] += p[0];
            mean[1] += p[1];
        }
        mean[0] /= 1000.0;
        mean[1] /= 1000.0;
        // Law of large numbers: mean per axis within 0.05 of 0.5.
        assert!((mean[0] - 0.5).abs() < 0.05, "mean x = {}", mean[0]);
        assert!((mean[1] - 0.5).abs() < 0.05, "mean y = {}", mean[1]);
    }

    #[test]
    fn uniform_is_deterministic() {
        let w = Window::new(vec![-1.0], vec![4.0]).unwrap();
        let a = generate_uniform(50, &w, 7);
        let b = generate_uniform(50, &w, 7);
        assert_eq!(a, b);
        let c = generate_uniform(50, &w, 8);
        assert_ne!(a, c);
    }

    #[test]
    fn uniform_degenerate_window_collapses() {
        let w = Window::new(vec![2.0, 5.0], vec![2.0, 5.0]).unwrap();
        let ps = generate_uniform(3, &w, 0);
        for p in ps.points() {
            assert_eq!(p, &[2.0, 5.0]);
        }
    }

    #[test]
    fn euclidean_axioms() {
        let m = Euclidean;
        let a = [0.0, 3.0];
        let b = [4.0, 0.0];
        assert_eq!(m.distance(&a, &b), 5.0);
        assert_eq!(m.distance(&b, &a), 5.0);
        assert_eq!(m.distance(&a, &a), 0.0);
    }

    #[test]
    fn select_carries_labels() {
        let ps = PointSet::from_rows(&[vec![0.0], vec![1.0], vec![2.0]])
            .unwrap()
            .with_labels(vec![0, 1, -1])
            .unwrap();
        let sub = ps.select(&[2, 0]);
        assert_eq!(sub.point(0), &[2.0]);
        assert_eq!(sub.labels(), Some(&[-1, 0][..]));
    }

    #[test]
    fn pointset_json_round_trip() {
        let ps = PointSet::from_rows(&[vec![0.5, 1.5], vec![2.25, -3.0]])
            .unwrap()
            .with_labels(vec![0, -1])
            .unwrap();
        let json = serde_json::to_string(&ps).unwrap();
        let back: PointSet = serde_json::from_str(&json).unwrap();
        assert_eq!(ps, back);
    }
}
