//! Hypothesis checks for the symmetric-configuration identities: closure
//! under the antipodal map, a vertex-transitivity necessary condition, and
//! centroid placement.
//!
//! Transitivity is verified only through distance-profile homogeneity: every
//! point must see the same sorted multiset of squared distances to the
//! others. A genuinely vertex-transitive configuration always passes;
//! passing does not prove transitivity. Exact verification would require the
//! configuration's isometry group and is out of scope — generator-produced
//! configurations carry a trusted transitivity flag instead.

use serde::Serialize;

use crate::core::{self, PointConfig, Tolerances};
use crate::error::Result;

/// Result of the antipodal-closure check.
#[derive(Debug, Clone, Serialize)]
pub struct AntipodalCheck {
    pub symmetric: bool,
    /// max over P of the distance from −P to its nearest point in the set.
    pub worst_deviation: f64,
}

/// Result of the distance-profile homogeneity check.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileCheck {
    pub homogeneous: bool,
    /// Max entrywise deviation of any point's sorted squared-distance
    /// profile from point 0's profile.
    pub max_deviation: f64,
}

/// Aggregated hypothesis checks.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetryChecks {
    pub antipodal_symmetric: bool,
    pub distance_profile_homogeneous: bool,
    pub centroid_at_origin: bool,
    pub worst_antipode_deviation: f64,
    pub profile_max_deviation: f64,
}

/// Is the configuration closed under P ↦ −P? Requires an origin-centered
/// sphere; `true` iff every antipode lands within `dedup_tol` of a point.
pub fn check_antipodal(config: &PointConfig, tol: &Tolerances) -> Result<AntipodalCheck> {
    config.require_origin_center()?;
    let worst = antipode_deviation(config);
    Ok(AntipodalCheck {
        symmetric: worst <= tol.dedup_tol,
        worst_deviation: worst,
    })
}

/// The quantity itself is center-free: max over P of min over Q of ‖−P − Q‖.
pub(crate) fn antipode_deviation(config: &PointConfig) -> f64 {
    let points = config.points();
    let n = config.dimension();
    let mut worst = 0.0_f64;
    let mut negated = vec![0.0; n];
    for p in points {
        for (t, x) in negated.iter_mut().zip(p) {
            *t = -x;
        }
        let mut nearest = f64::INFINITY;
        for q in points {
            let d = core::sqdist(&negated, q);
            if d < nearest {
                nearest = d;
            }
        }
        let nearest = nearest.sqrt();
        if nearest > worst {
            worst = nearest;
        }
    }
    worst
}

/// Necessary condition for vertex-transitivity: identical sorted
/// squared-distance profiles, entrywise within `dedup_tol`.
pub fn check_transitive_necessary(config: &PointConfig, tol: &Tolerances) -> ProfileCheck {
    let points = config.points();
    let v = points.len();
    if v < 2 {
        return ProfileCheck {
            homogeneous: true,
            max_deviation: 0.0,
        };
    }

    let profile = |i: usize| -> Vec<f64> {
        let mut row: Vec<f64> = (0..v)
            .filter(|&j| j != i)
            .map(|j| core::sqdist(&points[i], &points[j]))
            .collect();
        row.sort_by(f64::total_cmp);
        row
    };

    let reference = profile(0);
    let mut max_dev = 0.0_f64;
    for i in 1..v {
        let row = profile(i);
        for (a, b) in row.iter().zip(&reference) {
            let dev = (a - b).abs();
            if dev > max_dev {
                max_dev = dev;
            }
        }
    }
    ProfileCheck {
        homogeneous: max_dev <= tol.dedup_tol,
        max_deviation: max_dev,
    }
}

/// All checks at once. Never fails: the antipode deviation is computed on
/// raw coordinates whatever the declared center, and centroid placement is
/// measured against the true origin.
pub fn run_all_checks(config: &PointConfig, tol: &Tolerances) -> SymmetryChecks {
    let antipode = antipode_deviation(config);
    let profile = check_transitive_necessary(config, tol);
    let z = core::centroid(config);
    let origin_distance = core::norm(&z.coords);
    SymmetryChecks {
        antipodal_symmetric: antipode <= tol.dedup_tol,
        distance_profile_homogeneous: profile.homogeneous,
        centroid_at_origin: origin_distance <= tol.dedup_tol,
        worst_antipode_deviation: antipode,
        profile_max_deviation: profile.max_deviation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(edges: usize) -> PointConfig {
        let points = (0..edges)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / edges as f64;
                vec![a.cos(), a.sin()]
            })
            .collect();
        PointConfig::new(2, points).unwrap()
    }

    #[test]
    fn square_is_antipodal() {
        let check = check_antipodal(&polygon(4), &Tolerances::default()).unwrap();
        assert!(check.symmetric);
        assert!(check.worst_deviation < 1e-15);
    }

    #[test]
    fn triangle_antipode_deviation_is_hexagon_side() {
        let check = check_antipodal(&polygon(3), &Tolerances::default()).unwrap();
        assert!(!check.symmetric);
        // nearest vertex to a negated vertex sits 60° away on the circle
        assert!((check.worst_deviation - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cross_polytope_is_antipodal() {
        let config = PointConfig::new(
            3,
            vec![
                vec![1.0, 0.0, 0.0],
                vec![-1.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0],
                vec![0.0, -1.0, 0.0],
                vec![0.0, 0.0, 1.0],
                vec![0.0, 0.0, -1.0],
            ],
        )
        .unwrap();
        assert!(check_antipodal(&config, &Tolerances::default()).unwrap().symmetric);
    }

    #[test]
    fn non_origin_center_rejected() {
        let config =
            PointConfig::with_sphere(2, vec![vec![2.0, 1.0]], vec![1.0, 1.0], 1.0).unwrap();
        assert!(check_antipodal(&config, &Tolerances::default()).is_err());
    }

    #[test]
    fn polygons_are_profile_homogeneous() {
        for edges in [3, 5, 8, 12] {
            let check = check_transitive_necessary(&polygon(edges), &Tolerances::default());
            assert!(check.homogeneous, "E={edges} dev={}", check.max_deviation);
        }
    }

    #[test]
    fn perturbed_pentagon_fails_profile_check() {
        let mut points: Vec<Vec<f64>> = (0..5)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / 5.0;
                vec![a.cos(), a.sin()]
            })
            .collect();
        // move one vertex 0.1 radians along the circle
        let a = 2.0 * std::f64::consts::PI * 4.0 / 5.0 + 0.1;
        points[4] = vec![a.cos(), a.sin()];
        let config = PointConfig::new(2, points).unwrap();
        let check = check_transitive_necessary(&config, &Tolerances::default());
        assert!(!check.homogeneous);
        assert!(check.max_deviation > 1e-3);
    }

    #[test]
    fn run_all_checks_hexagon_and_triangle() {
        let tol = Tolerances::default();
        let hexagon = run_all_checks(&polygon(6), &tol);
        assert!(hexagon.antipodal_symmetric);
        assert!(hexagon.distance_profile_homogeneous);
        assert!(hexagon.centroid_at_origin);

        let triangle = run_all_checks(&polygon(3), &tol);
        assert!(!triangle.antipodal_symmetric);
        assert!(triangle.distance_profile_homogeneous);
        assert!(triangle.centroid_at_origin);
    }

    #[test]
    fn random_points_fail_profile_check() {
        let config = crate::generators::random_sphere(3, 5, 99).unwrap().config;
        let checks = run_all_checks(&config, &Tolerances::default());
        assert!(!checks.distance_profile_homogeneous);
        assert!(!checks.antipodal_symmetric);
        assert!(!checks.centroid_at_origin);
    }

    #[test]
    fn single_point_profile_trivially_homogeneous() {
        let config = PointConfig::new(2, vec![vec![1.0, 0.0]]).unwrap();
        let check = check_transitive_necessary(&config, &Tolerances::default());
        assert!(check.homogeneous);
        assert_eq!(check.max_deviation, 0.0);
    }
}
