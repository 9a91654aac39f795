//! Point configurations on spheres, the tolerance policy, centroids, and the
//! distance primitives every other module builds on.
//!
//! All coordinates are Cartesian. Sums accumulate in index order so results
//! are bit-reproducible across runs on the same platform.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in R^n, stored as its Cartesian coordinates.
pub type Point = Vec<f64>;

/// Tolerance policy shared by validation, spectral clustering, and
/// closed-form-versus-direct comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Absolute tolerance on | ‖P − center‖ − radius | for sphere membership.
    pub on_sphere_tol: f64,
    /// Absolute tolerance on squared lengths when clustering distances.
    pub dedup_tol: f64,
    /// Relative tolerance when comparing independent computation routes.
    pub identity_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            on_sphere_tol: 1e-9,
            dedup_tol: 1e-9,
            identity_tol: 1e-9,
        }
    }
}

impl Tolerances {
    /// Same value for all three tolerances.
    pub fn uniform(tol: f64) -> Self {
        Tolerances {
            on_sphere_tol: tol,
            dedup_tol: tol,
            identity_tol: tol,
        }
    }

    pub fn check(&self) -> Result<()> {
        for (name, v) in [
            ("on_sphere_tol", self.on_sphere_tol),
            ("dedup_tol", self.dedup_tol),
            ("identity_tol", self.identity_tol),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be strictly positive and finite, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// A finite multiset of points in R^n, nominally on a sphere.
///
/// Structural invariants (V ≥ 1, dimension ≥ 1, consistent coordinate
/// lengths, finite values, radius > 0) are enforced at every construction
/// site, including deserialization; sphere membership is *not* assumed — it
/// is checked by [`validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPointConfig")]
pub struct PointConfig {
    dimension: usize,
    radius: f64,
    center: Point,
    points: Vec<Point>,
}

/// Interchange mirror of [`PointConfig`]: `radius` and `center` are optional
/// in files and default to 1.0 and the origin.
#[derive(Deserialize)]
struct RawPointConfig {
    dimension: usize,
    #[serde(default)]
    radius: Option<f64>,
    #[serde(default)]
    center: Option<Vec<f64>>,
    points: Vec<Vec<f64>>,
}

impl TryFrom<RawPointConfig> for PointConfig {
    type Error = Error;

    fn try_from(raw: RawPointConfig) -> Result<Self> {
        let center = raw.center.unwrap_or_else(|| vec![0.0; raw.dimension]);
        PointConfig::with_sphere(raw.dimension, raw.points, center, raw.radius.unwrap_or(1.0))
    }
}

impl PointConfig {
    /// Points on the unit sphere centered at the origin.
    pub fn new(dimension: usize, points: Vec<Point>) -> Result<Self> {
        let center = vec![0.0; dimension];
        PointConfig::with_sphere(dimension, points, center, 1.0)
    }

    /// Points on an arbitrary sphere.
    pub fn with_sphere(
        dimension: usize,
        points: Vec<Point>,
        center: Point,
        radius: f64,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        if points.is_empty() {
            return Err(Error::Empty);
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "radius must be strictly positive and finite, got {radius}"
            )));
        }
        if center.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                actual: center.len(),
            });
        }
        if center.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("center has non-finite coordinates".into()));
        }
        for p in &points {
            if p.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    actual: p.len(),
                });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter("point has non-finite coordinates".into()));
            }
        }
        Ok(PointConfig {
            dimension,
            radius,
            center,
            points,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Number of points V (multiset size).
    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn is_origin_centered(&self) -> bool {
        self.center.iter().all(|&c| c == 0.0)
    }

    /// The sphere is the unit sphere about the origin (center exactly zero,
    /// radius exactly 1). Point membership is a separate, tolerance-based
    /// check; see [`validate`].
    pub fn is_unit_sphere_at_origin(&self) -> bool {
        self.is_origin_centered() && self.radius == 1.0
    }

    pub(crate) fn require_origin_center(&self) -> Result<()> {
        if self.is_origin_centered() {
            Ok(())
        } else {
            Err(Error::hypothesis(
                "sphere centered at origin",
                format!("sphere center is {:?}", self.center),
            ))
        }
    }

    pub(crate) fn require_unit_sphere_at_origin(&self) -> Result<()> {
        self.require_origin_center()?;
        if self.radius != 1.0 {
            return Err(Error::hypothesis(
                "unit sphere",
                format!("sphere radius is {}, expected 1", self.radius),
            ));
        }
        Ok(())
    }

    /// All points (and the center) shifted by `shift`.
    pub fn translated(&self, shift: &[f64]) -> Result<Self> {
        if shift.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                actual: shift.len(),
            });
        }
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(shift).map(|(x, s)| x + s).collect())
            .collect();
        let center = self.center.iter().zip(shift).map(|(c, s)| c + s).collect();
        PointConfig::with_sphere(self.dimension, points, center, self.radius)
    }

    /// All points (and the center) mapped through an n×n matrix, given
    /// row-major. Intended for orthogonal maps; no orthogonality check is
    /// performed.
    pub fn apply_matrix(&self, matrix: &[Vec<f64>]) -> Result<Self> {
        let n = self.dimension;
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: matrix.len(),
            });
        }
        let map = |p: &[f64]| -> Point { matrix.iter().map(|row| dot(row, p)).collect() };
        let points = self.points.iter().map(|p| map(p)).collect();
        let center = map(&self.center);
        PointConfig::with_sphere(n, points, center, self.radius)
    }
}

/// Per-point deviations of a configuration from its declared sphere.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    /// | ‖P_i − center‖ − radius | for every point, in input order.
    pub deviations: Vec<f64>,
    /// Indices of points whose deviation exceeds `on_sphere_tol`.
    pub flagged: Vec<usize>,
    pub worst_index: usize,
    pub worst_deviation: f64,
    pub all_on_sphere: bool,
}

/// Check every point against the declared sphere. Never mutates the input.
pub fn validate(config: &PointConfig, tol: &Tolerances) -> ValidationReport {
    let mut deviations = Vec::with_capacity(config.num_points());
    let mut flagged = Vec::new();
    let mut worst_index = 0;
    let mut worst = 0.0_f64;
    for (i, p) in config.points().iter().enumerate() {
        let dist = distance(p, config.center());
        let dev = (dist - config.radius()).abs();
        if dev > tol.on_sphere_tol {
            flagged.push(i);
        }
        if dev > worst {
            worst = dev;
            worst_index = i;
        }
        deviations.push(dev);
    }
    ValidationReport {
        deviations,
        flagged: flagged.clone(),
        worst_index,
        worst_deviation: worst,
        all_on_sphere: flagged.is_empty(),
    }
}

pub(crate) fn require_on_sphere(config: &PointConfig, tol: &Tolerances) -> Result<()> {
    let report = validate(config, tol);
    if report.all_on_sphere {
        Ok(())
    } else {
        Err(Error::hypothesis(
            "points on sphere",
            format!(
                "point {} deviates from the sphere by {:.3e} (tolerance {:.3e}); {} of {} points flagged",
                report.worst_index,
                report.worst_deviation,
                tol.on_sphere_tol,
                report.flagged.len(),
                config.num_points()
            ),
        ))
    }
}

/// Coordinate-wise mean of the configuration (unit masses) and its distance
/// to the sphere center.
#[derive(Debug, Clone, Serialize)]
pub struct Centroid {
    pub coords: Point,
    pub distance_to_center: f64,
}

pub fn centroid(config: &PointConfig) -> Centroid {
    let n = config.dimension();
    let v = config.num_points() as f64;
    let mut coords = vec![0.0; n];
    for p in config.points() {
        for (acc, x) in coords.iter_mut().zip(p) {
            *acc += x;
        }
    }
    for acc in coords.iter_mut() {
        *acc /= v;
    }
    let distance_to_center = distance(&coords, config.center());
    Centroid {
        coords,
        distance_to_center,
    }
}

/// Squared Euclidean distance between two points of equal dimension.
pub fn squared_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            actual: q.len(),
        });
    }
    Ok(sqdist(p, q))
}

pub(crate) fn sqdist(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    let mut acc = 0.0;
    for (a, b) in p.iter().zip(q) {
        let d = a - b;
        acc += d * d;
    }
    acc
}

pub(crate) fn distance(p: &[f64], q: &[f64]) -> f64 {
    sqdist(p, q).sqrt()
}

pub(crate) fn dot(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    let mut acc = 0.0;
    for (a, b) in p.iter().zip(q) {
        acc += a * b;
    }
    acc
}

pub(crate) fn norm_squared(p: &[f64]) -> f64 {
    dot(p, p)
}

pub(crate) fn norm(p: &[f64]) -> f64 {
    norm_squared(p).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_exact_unit_vectors() {
        let config = PointConfig::new(2, vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let report = validate(&config, &Tolerances::default());
        assert!(report.all_on_sphere);
        assert!(report.deviations.iter().all(|&d| d == 0.0));
    }

    #[test]
    fn validate_flags_off_sphere_point() {
        let config = PointConfig::new(2, vec![vec![2.0, 0.0]]).unwrap();
        let report = validate(&config, &Tolerances::default());
        assert_eq!(report.flagged, vec![0]);
        assert!((report.worst_deviation - 1.0).abs() < 1e-15);
        assert!(!report.all_on_sphere);
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            PointConfig::new(2, vec![vec![1.0, 0.0, 0.0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(PointConfig::new(2, vec![]), Err(Error::Empty)));
        assert!(matches!(
            PointConfig::new(0, vec![vec![]]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            PointConfig::with_sphere(1, vec![vec![1.0]], vec![0.0], -1.0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn centroid_antipodal_pair_is_origin() {
        let config = PointConfig::new(2, vec![vec![1.0, 0.0], vec![-1.0, 0.0]]).unwrap();
        let c = centroid(&config);
        assert_eq!(c.coords, vec![0.0, 0.0]);
        assert_eq!(c.distance_to_center, 0.0);
    }

    #[test]
    fn centroid_single_point() {
        let config = PointConfig::new(2, vec![vec![1.0, 0.0]]).unwrap();
        let c = centroid(&config);
        assert_eq!(c.coords, vec![1.0, 0.0]);
        assert!((c.distance_to_center - 1.0).abs() < 1e-15);
    }

    #[test]
    fn centroid_regular_polygons_at_origin() {
        for edges in 2..=12usize {
            let points: Vec<Point> = (0..edges)
                .map(|i| {
                    let a = 2.0 * std::f64::consts::PI * i as f64 / edges as f64;
                    vec![a.cos(), a.sin()]
                })
                .collect();
            let config = PointConfig::new(2, points).unwrap();
            let c = centroid(&config);
            assert!(
                c.distance_to_center < 1e-14,
                "E={edges} centroid distance {}",
                c.distance_to_center
            );
        }
    }

    #[test]
    fn squared_distance_basics() {
        assert_eq!(squared_distance(&[1.0, 0.0], &[-1.0, 0.0]).unwrap(), 4.0);
        assert_eq!(squared_distance(&[1.0, 0.0], &[1.0, 0.0]).unwrap(), 0.0);
        assert_eq!(squared_distance(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), 2.0);
        assert!(squared_distance(&[1.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn centroid_translation_equivariance() {
        let config = PointConfig::new(
            3,
            vec![
                vec![1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, 0.0, 1.0],
            ],
        )
        .unwrap();
        let shift = [0.25, -1.5, 3.0];
        let shifted = config.translated(&shift).unwrap();
        let c0 = centroid(&config);
        let c1 = centroid(&shifted);
        for ((a, b), s) in c1.coords.iter().zip(&c0.coords).zip(&shift) {
            assert!((a - (b + s)).abs() < 1e-15);
        }
        // distance to center is translation-invariant
        assert!((c1.distance_to_center - c0.distance_to_center).abs() < 1e-15);
    }

    #[test]
    fn deserialization_defaults_and_checks() {
        let config: PointConfig =
            serde_json::from_str(r#"{"dimension":2,"points":[[1.0,0.0],[0.0,1.0]]}"#).unwrap();
        assert_eq!(config.radius(), 1.0);
        assert_eq!(config.center(), &[0.0, 0.0]);

        let bad = serde_json::from_str::<PointConfig>(r#"{"dimension":2,"points":[[1.0]]}"#);
        assert!(bad.is_err());
    }
}
