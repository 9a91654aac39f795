//! Sum of squared chord lengths by three independent routes.
//!
//! For V points on a sphere of radius r whose centroid sits at distance d
//! from the sphere center, the sum of the squared lengths of all C(V,2)
//! chords equals V²(r² − d²). The three routes:
//!
//! 1. direct pairwise summation, Σ_{i<j} ‖P_i − P_j‖² — the brute-force
//!    oracle, needs no sphere hypothesis;
//! 2. the centroid closed form V²(r² − d²);
//! 3. the moment-of-inertia decomposition: with J(Q) = Σ_i ‖Q − P_i‖²,
//!    Lagrange's identity J(Q) = J(Z) + V‖Q − Z‖² at the sphere center and
//!    Jacobi's identity J(Z) = (1/V)·Σ_{i<j} ‖P_i − P_j‖² give the chord sum
//!    as V·J(Z).
//!
//! The closed form is stated for the unit sphere; the r² generalization
//! falls out of the inertia decomposition and is exposed here, but every
//! shipped verification suite pins r = 1.

use serde::Serialize;

use crate::core::{self, PointConfig, Tolerances};
use crate::error::Result;

/// All three chord-sum routes plus their mutual discrepancy.
#[derive(Debug, Clone, Serialize)]
pub struct ChordReport {
    /// C(V,2), the number of unordered point pairs.
    pub pair_count: u64,
    /// Σ over unordered pairs of squared distances.
    pub direct_sum: f64,
    /// V²(r² − d²).
    pub centroid_formula: f64,
    /// V·J(Z) from the inertia decomposition.
    pub inertia_formula: f64,
    /// d, the distance from the centroid to the sphere center.
    pub centroid_distance: f64,
    /// Max pairwise absolute difference among the three route values.
    pub max_abs_discrepancy: f64,
    /// r² − d²: the mean squared chord length when two points are drawn
    /// independently *with replacement* (self-pairs of length 0 included).
    /// That convention makes E[c²] = (2/V²)·direct_sum an exact identity.
    pub expected_squared_chord: f64,
}

/// Moments of inertia about the sphere center and the centroid.
#[derive(Debug, Clone, Serialize)]
pub struct InertiaDecomposition {
    /// J(center) = Σ ‖center − P_i‖² (equals V·r² on the sphere).
    pub j_about_center: f64,
    /// J(Z) = Σ ‖Z − P_i‖².
    pub j_about_centroid: f64,
    /// J(center) − J(Z) − V·d²; zero by Lagrange's identity.
    pub lagrange_residual: f64,
}

/// Direct pairwise sum over unordered pairs. 0 when V = 1.
pub fn chord_sum_direct(config: &PointConfig) -> f64 {
    let points = config.points();
    let mut acc = 0.0;
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            acc += core::sqdist(&points[i], &points[j]);
        }
    }
    acc
}

/// Closed form V²(r² − d²). Requires every point on the declared sphere;
/// the error names the worst offending point.
pub fn chord_sum_centroid(config: &PointConfig, tol: &Tolerances) -> Result<f64> {
    core::require_on_sphere(config, tol)?;
    let v = config.num_points() as f64;
    let d = core::centroid(config).distance_to_center;
    let r = config.radius();
    Ok(v * v * (r * r - d * d))
}

/// Inertia route: computes J(center) and J(Z) directly and returns the
/// decomposition together with the implied chord sum V·J(Z).
pub fn chord_sum_inertia(
    config: &PointConfig,
    tol: &Tolerances,
) -> Result<(InertiaDecomposition, f64)> {
    core::require_on_sphere(config, tol)?;
    let v = config.num_points() as f64;
    let z = core::centroid(config);

    let mut j_center = 0.0;
    let mut j_centroid = 0.0;
    for p in config.points() {
        j_center += core::sqdist(config.center(), p);
        j_centroid += core::sqdist(&z.coords, p);
    }

    let d = z.distance_to_center;
    let decomposition = InertiaDecomposition {
        j_about_center: j_center,
        j_about_centroid: j_centroid,
        lagrange_residual: j_center - j_centroid - v * d * d,
    };
    Ok((decomposition, v * j_centroid))
}

/// Run all three routes and report their agreement.
pub fn analyze_chords(config: &PointConfig, tol: &Tolerances) -> Result<ChordReport> {
    let direct = chord_sum_direct(config);
    let centroid_formula = chord_sum_centroid(config, tol)?;
    let (_, inertia_formula) = chord_sum_inertia(config, tol)?;
    let d = core::centroid(config).distance_to_center;
    let r = config.radius();
    let v = config.num_points() as u64;

    let discrepancy = (direct - centroid_formula)
        .abs()
        .max((direct - inertia_formula).abs())
        .max((centroid_formula - inertia_formula).abs());

    Ok(ChordReport {
        pair_count: v * (v - 1) / 2,
        direct_sum: direct,
        centroid_formula,
        inertia_formula,
        centroid_distance: d,
        max_abs_discrepancy: discrepancy,
        expected_squared_chord: r * r - d * d,
    })
}
