//! Exact constructors for the configuration families the verification
//! suites exercise. Every generator emits points on the unit sphere at the
//! origin (validating at 1e-12 by construction) plus metadata flags that are
//! set only when guaranteed by the construction itself.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;
use serde_json::json;

use crate::core::{self, Point, PointConfig};
use crate::error::{Error, Result};
use crate::symmetry;

/// Maximum number of points any orbit-style generator may emit.
pub const ORBIT_SIZE_GUARD: u128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Polygon,
    Simplex,
    CrossPolytope,
    Hypercube,
    Prism,
    Antiprism,
    Permutahedron,
    SignedPermOrbit,
    RandomSphere,
}

/// A constructed configuration with its provenance and trusted flags.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratedConfig {
    pub config: PointConfig,
    pub family: Family,
    /// Family-specific parameters, as a JSON object.
    pub params: serde_json::Value,
    /// The symmetry group acts transitively — known from the construction.
    pub known_transitive: bool,
    /// Closed under the antipodal map — known from the construction.
    pub known_antipodal: bool,
}

impl GeneratedConfig {
    /// The metadata block embedded in generated point-set files.
    pub fn metadata_value(&self) -> serde_json::Value {
        json!({
            "family": self.family,
            "params": self.params,
            "known_transitive": self.known_transitive,
            "known_antipodal": self.known_antipodal,
        })
    }
}

fn ring_point(angle: f64) -> Point {
    vec![angle.cos(), angle.sin()]
}

/// Vertices of the regular E-gon inscribed in the unit circle.
pub fn regular_polygon(edges: usize) -> Result<GeneratedConfig> {
    if edges < 2 {
        return Err(Error::InvalidParameter(format!(
            "polygon needs at least 2 edges, got {edges}"
        )));
    }
    let points = (0..edges)
        .map(|i| ring_point(2.0 * std::f64::consts::PI * i as f64 / edges as f64))
        .collect();
    Ok(GeneratedConfig {
        config: PointConfig::new(2, points)?,
        family: Family::Polygon,
        params: json!({ "edges": edges }),
        known_transitive: true,
        known_antipodal: edges.is_multiple_of(2),
    })
}

/// The n+1 vertices of the regular simplex in R^n: unit vectors with
/// pairwise inner product −1/n and centroid at the origin.
///
/// Construction: project the standard basis of R^{n+1} onto the hyperplane
/// orthogonal to (1,…,1) and express it in that hyperplane's Helmert
/// orthonormal basis; the basis-vector coordinates survive the projection
/// unchanged, so vertex i is (v_1[i], …, v_n[i]) scaled by √((n+1)/n).
pub fn regular_simplex(dimension: usize) -> Result<GeneratedConfig> {
    if dimension < 1 {
        return Err(Error::InvalidParameter("simplex dimension must be at least 1".into()));
    }
    let n = dimension;
    let scale = ((n + 1) as f64 / n as f64).sqrt();
    let mut points = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut p = Vec::with_capacity(n);
        for k in 1..=n {
            // Helmert vector v_k: k entries of 1, then −k, then zeros,
            // normalized by √(k(k+1))
            let denom = (k as f64 * (k + 1) as f64).sqrt();
            let coord = if i < k {
                1.0 / denom
            } else if i == k {
                -(k as f64) / denom
            } else {
                0.0
            };
            p.push(coord * scale);
        }
        points.push(p);
    }
    Ok(GeneratedConfig {
        config: PointConfig::new(n, points)?,
        family: Family::Simplex,
        params: json!({ "dimension": n }),
        known_transitive: true,
        known_antipodal: false,
    })
}

/// The 2n points ±e_1, …, ±e_n.
pub fn cross_polytope(dimension: usize) -> Result<GeneratedConfig> {
    if dimension < 1 {
        return Err(Error::InvalidParameter(
            "cross-polytope dimension must be at least 1".into(),
        ));
    }
    let mut points = Vec::with_capacity(2 * dimension);
    for i in 0..dimension {
        for sign in [1.0, -1.0] {
            let mut p = vec![0.0; dimension];
            p[i] = sign;
            points.push(p);
        }
    }
    Ok(GeneratedConfig {
        config: PointConfig::new(dimension, points)?,
        family: Family::CrossPolytope,
        params: json!({ "dimension": dimension }),
        known_transitive: true,
        known_antipodal: true,
    })
}

/// The 2^n points (±1, …, ±1)/√n.
pub fn hypercube(dimension: usize) -> Result<GeneratedConfig> {
    if dimension < 1 {
        return Err(Error::InvalidParameter("hypercube dimension must be at least 1".into()));
    }
    if dimension > 20 {
        return Err(Error::SizeGuard(format!(
            "hypercube dimension {dimension} would emit 2^{dimension} points (limit 2^20)"
        )));
    }
    let scale = 1.0 / (dimension as f64).sqrt();
    let count = 1usize << dimension;
    let mut points = Vec::with_capacity(count);
    for mask in 0..count {
        let p = (0..dimension)
            .map(|bit| if mask >> bit & 1 == 1 { -scale } else { scale })
            .collect();
        points.push(p);
    }
    Ok(GeneratedConfig {
        config: PointConfig::new(dimension, points)?,
        family: Family::Hypercube,
        params: json!({ "dimension": dimension }),
        known_transitive: true,
        known_antipodal: true,
    })
}

fn validate_ring_params(base_edges: usize, polar_angle: f64) -> Result<()> {
    if base_edges < 3 {
        return Err(Error::InvalidParameter(format!(
            "base needs at least 3 edges, got {base_edges}"
        )));
    }
    if !(polar_angle > 0.0 && polar_angle < std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "polar angle must lie strictly between 0 and π/2, got {polar_angle}"
        )));
    }
    Ok(())
}

fn two_rings(base_edges: usize, polar_angle: f64, lower_offset: f64) -> Vec<Point> {
    let rho = polar_angle.sin();
    let z = polar_angle.cos();
    let mut points = Vec::with_capacity(2 * base_edges);
    for i in 0..base_edges {
        let a = 2.0 * std::f64::consts::PI * i as f64 / base_edges as f64;
        points.push(vec![rho * a.cos(), rho * a.sin(), z]);
    }
    for i in 0..base_edges {
        let a = 2.0 * std::f64::consts::PI * i as f64 / base_edges as f64 + lower_offset;
        points.push(vec![rho * a.cos(), rho * a.sin(), -z]);
    }
    points
}

/// A prism: two aligned regular E-gon rings at polar angles ±polar_angle
/// from the z-axis. Antipodal exactly when E is even.
pub fn prism(base_edges: usize, polar_angle: f64) -> Result<GeneratedConfig> {
    validate_ring_params(base_edges, polar_angle)?;
    let points = two_rings(base_edges, polar_angle, 0.0);
    let config = PointConfig::new(3, points)?;
    let antipodal = base_edges.is_multiple_of(2);
    verify_antipodality(&config, antipodal, "prism");
    Ok(GeneratedConfig {
        config,
        family: Family::Prism,
        params: json!({ "base_edges": base_edges, "polar_angle": polar_angle }),
        known_transitive: true,
        known_antipodal: antipodal,
    })
}

/// An antiprism: the lower ring is rotated by π/E. Antipodal exactly when E
/// is odd.
pub fn antiprism(base_edges: usize, polar_angle: f64) -> Result<GeneratedConfig> {
    validate_ring_params(base_edges, polar_angle)?;
    let offset = std::f64::consts::PI / base_edges as f64;
    let points = two_rings(base_edges, polar_angle, offset);
    let config = PointConfig::new(3, points)?;
    let antipodal = !base_edges.is_multiple_of(2);
    verify_antipodality(&config, antipodal, "antiprism");
    Ok(GeneratedConfig {
        config,
        family: Family::Antiprism,
        params: json!({ "base_edges": base_edges, "polar_angle": polar_angle }),
        known_transitive: true,
        known_antipodal: antipodal,
    })
}

/// The metadata flags must never be wrong: cross-check the parity argument
/// numerically and abort on mismatch.
fn verify_antipodality(config: &PointConfig, expected: bool, what: &str) {
    let deviation = symmetry::antipode_deviation(config);
    let observed = deviation <= 1e-9;
    assert!(
        observed == expected,
        "{what} antipodality mismatch: parity predicts {expected}, observed deviation {deviation:.3e}"
    );
}

fn permutations_of(values: &[f64]) -> Vec<Vec<f64>> {
    // Heap's algorithm, iterative
    let mut work = values.to_vec();
    let n = work.len();
    let mut out = vec![work.clone()];
    let mut counters = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                work.swap(0, i);
            } else {
                work.swap(counters[i], i);
            }
            out.push(work.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All n! permutations of (1, 2, …, n), centered by subtracting the mean
/// (n+1)/2 and scaled to unit norm. Closed under negation for every n
/// (negating a centered permutation gives the centered reversed
/// permutation), so the flag is set.
pub fn permutahedron(dimension: usize) -> Result<GeneratedConfig> {
    if dimension < 2 {
        return Err(Error::InvalidParameter(
            "permutahedron dimension must be at least 2".into(),
        ));
    }
    if dimension > 8 {
        return Err(Error::SizeGuard(format!(
            "permutahedron dimension {dimension} would emit {dimension}! points (limit 8!)"
        )));
    }
    let mean = (dimension as f64 + 1.0) / 2.0;
    let base: Vec<f64> = (1..=dimension).map(|i| i as f64 - mean).collect();
    let norm = core::norm(&base);
    let points = permutations_of(&base)
        .into_iter()
        .map(|p| p.into_iter().map(|x| x / norm).collect())
        .collect();
    Ok(GeneratedConfig {
        config: PointConfig::new(dimension, points)?,
        family: Family::Permutahedron,
        params: json!({ "dimension": dimension }),
        known_transitive: true,
        known_antipodal: true,
    })
}

/// Orbit of a unit seed point under all coordinate permutations, and under
/// all sign flips as well when `signs` is set. Duplicates are merged; the
/// output is sorted lexicographically.
pub fn signed_perm_orbit(seed_point: &[f64], signs: bool) -> Result<GeneratedConfig> {
    let n = seed_point.len();
    if n == 0 {
        return Err(Error::InvalidParameter("seed point must be non-empty".into()));
    }
    let norm = core::norm(seed_point);
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidParameter(format!(
            "seed point must lie on the unit sphere (norm {norm}); normalize it first"
        )));
    }
    let bound = factorial(n) * if signs { 1u128 << n } else { 1 };
    if bound > ORBIT_SIZE_GUARD {
        return Err(Error::SizeGuard(format!(
            "orbit could contain up to {bound} points (limit {ORBIT_SIZE_GUARD})"
        )));
    }

    let normalize = |x: f64| if x == 0.0 { 0.0 } else { x };
    let mut points: Vec<Point> = Vec::new();
    for perm in permutations_of(seed_point) {
        if signs {
            for mask in 0..(1usize << n) {
                let p: Point = perm
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| normalize(if mask >> i & 1 == 1 { -x } else { x }))
                    .collect();
                points.push(p);
            }
        } else {
            points.push(perm.iter().map(|&x| normalize(x)).collect());
        }
    }
    points.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    points.dedup();

    Ok(GeneratedConfig {
        config: PointConfig::new(n, points)?,
        family: Family::SignedPermOrbit,
        params: json!({ "dimension": n, "seed_point": seed_point, "signs": signs }),
        known_transitive: true,
        known_antipodal: signs,
    })
}

/// V points drawn uniformly on S^{n−1} by normalizing standard Gaussian
/// vectors. Fully determined by `rng_seed`.
pub fn random_sphere(dimension: usize, count: usize, rng_seed: u64) -> Result<GeneratedConfig> {
    if dimension < 1 {
        return Err(Error::InvalidParameter("dimension must be at least 1".into()));
    }
    if count < 1 {
        return Err(Error::Empty);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let p: Point = (0..dimension).map(|_| rng.sample(StandardNormal)).collect();
        let norm = core::norm(&p);
        if norm < 1e-12 {
            continue;
        }
        points.push(p.into_iter().map(|x| x / norm).collect());
    }
    Ok(GeneratedConfig {
        config: PointConfig::new(dimension, points)?,
        family: Family::RandomSphere,
        params: json!({ "dimension": dimension, "count": count, "rng_seed": rng_seed }),
        known_transitive: false,
        known_antipodal: false,
    })
}

/// A random unit vector, drawn the same way `random_sphere` draws points.
pub fn random_unit_vector(dimension: usize, rng_seed: u64) -> Result<Point> {
    Ok(random_sphere(dimension, 1, rng_seed)?.config.points()[0].clone())
}

/// A random n×n orthogonal matrix (row-major): Gram-Schmidt on Gaussian
/// rows, deterministic for a given seed.
pub fn random_orthogonal(dimension: usize, rng_seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(dimension);
    while rows.len() < dimension {
        let mut candidate: Vec<f64> =
            (0..dimension).map(|_| rng.sample(StandardNormal)).collect();
        for row in &rows {
            let proj = core::dot(&candidate, row);
            for (c, r) in candidate.iter_mut().zip(row) {
                *c -= proj * r;
            }
        }
        let norm = core::norm(&candidate);
        if norm < 1e-8 {
            continue; // degenerate draw; resample
        }
        for c in candidate.iter_mut() {
            *c /= norm;
        }
        rows.push(candidate);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chords;
    use crate::core::{validate, Tolerances};
    use crate::spectrum;

    fn assert_on_sphere(config: &PointConfig) {
        let report = validate(config, &Tolerances::uniform(1e-12));
        assert!(
            report.all_on_sphere,
            "worst deviation {:.3e}",
            report.worst_deviation
        );
    }

    #[test]
    fn polygon_square_chords() {
        let g = regular_polygon(4).unwrap();
        assert_on_sphere(&g.config);
        assert!(g.known_antipodal);
        assert!((chords::chord_sum_direct(&g.config) - 16.0).abs() < 1e-12);
    }

    #[test]
    fn polygon_triangle_not_antipodal() {
        let g = regular_polygon(3).unwrap();
        assert!(!g.known_antipodal);
        assert!(g.known_transitive);
    }

    #[test]
    fn polygon_rejects_fewer_than_two_edges() {
        assert!(regular_polygon(1).is_err());
    }

    #[test]
    fn simplex_gram_structure() {
        for n in 1..=6 {
            let g = regular_simplex(n).unwrap();
            assert_on_sphere(&g.config);
            assert_eq!(g.config.num_points(), n + 1);
            let points = g.config.points();
            let expected = -1.0 / n as f64;
            for i in 0..points.len() {
                for j in (i + 1)..points.len() {
                    let ip = core::dot(&points[i], &points[j]);
                    assert!(
                        (ip - expected).abs() < 1e-12,
                        "n={n} inner product {ip}, expected {expected}"
                    );
                }
            }
            let z = core::centroid(&g.config);
            assert!(z.distance_to_center < 1e-12);
        }
    }

    #[test]
    fn tetrahedron_chords_eight_thirds() {
        let g = regular_simplex(3).unwrap();
        let points = g.config.points();
        for i in 0..points.len() {
            for j in (i + 1)..points.len() {
                let d = core::sqdist(&points[i], &points[j]);
                assert!((d - 8.0 / 3.0).abs() < 1e-12);
            }
        }
        // chord sum (n+1)² with centroid at origin
        assert!((chords::chord_sum_direct(&g.config) - 16.0).abs() < 1e-12);
    }

    #[test]
    fn hypercube_and_cross_polytope_edges() {
        let tol = Tolerances::default();
        let cube = hypercube(3).unwrap();
        assert_on_sphere(&cube.config);
        assert_eq!(cube.config.num_points(), 8);
        let s = spectrum::distance_spectrum(&cube.config, &tol).unwrap();
        assert_eq!(s.k, 3);
        for (got, want) in s.squared_lengths.iter().zip([4.0 / 3.0, 8.0 / 3.0, 4.0]) {
            assert!((got - want).abs() < 1e-12);
        }

        let cross = cross_polytope(3).unwrap();
        let s = spectrum::distance_spectrum(&cross.config, &tol).unwrap();
        assert_eq!(s.k, 2);
        assert!((s.sum_of_squares - 6.0).abs() < 1e-12);

        // degenerate n=1 cases coincide: {±1}
        let a = hypercube(1).unwrap();
        let b = cross_polytope(1).unwrap();
        assert_eq!(a.config.points(), b.config.points());
    }

    #[test]
    fn hypercube_size_guard() {
        assert!(matches!(hypercube(21), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn prism_pi4_distinct_lengths() {
        let tol = Tolerances::default();
        let g = prism(3, std::f64::consts::FRAC_PI_4).unwrap();
        assert_on_sphere(&g.config);
        assert!(!g.known_antipodal);
        let s = spectrum::distance_spectrum(&g.config, &tol).unwrap();
        assert_eq!(s.k, 3);
        for (got, want) in s.squared_lengths.iter().zip([1.5, 2.0, 3.5]) {
            assert!((got - want).abs() < 1e-12, "got {got}, want {want}");
        }
    }

    #[test]
    fn prism_even_base_is_antipodal() {
        let g = prism(4, std::f64::consts::FRAC_PI_4).unwrap();
        assert!(g.known_antipodal);
        let g = antiprism(5, 0.7).unwrap();
        assert!(g.known_antipodal);
        let g = antiprism(4, 0.7).unwrap();
        assert!(!g.known_antipodal);
    }

    #[test]
    fn ring_param_errors() {
        assert!(prism(2, 0.5).is_err());
        assert!(prism(3, 0.0).is_err());
        assert!(prism(3, std::f64::consts::FRAC_PI_2).is_err());
        assert!(antiprism(3, -0.1).is_err());
    }

    #[test]
    fn permutahedron_small_cases() {
        let tol = Tolerances::default();
        let g = permutahedron(2).unwrap();
        assert_eq!(g.config.num_points(), 2);
        // two antipodal points
        let p = &g.config.points()[0];
        let q = &g.config.points()[1];
        assert!((core::sqdist(p, q) - 4.0).abs() < 1e-12);

        let g = permutahedron(3).unwrap();
        assert_on_sphere(&g.config);
        assert_eq!(g.config.num_points(), 6);
        let s = spectrum::distance_spectrum(&g.config, &tol).unwrap();
        assert_eq!(s.k, 3);
        assert!((s.sum_of_squares - 8.0).abs() < 1e-12);

        assert!(matches!(permutahedron(9), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn orbit_square_and_cross() {
        let g = signed_perm_orbit(&[1.0, 0.0], true).unwrap();
        assert_eq!(g.config.num_points(), 4);
        assert!(g.known_antipodal);

        let g = signed_perm_orbit(&[1.0, 0.0, 0.0], true).unwrap();
        assert_eq!(g.config.num_points(), 6);

        let err = signed_perm_orbit(&[0.5, 0.5], true);
        assert!(err.is_err(), "non-unit seed must be rejected");
    }

    #[test]
    fn orbit_size_guard() {
        let seed = random_unit_vector(9, 1).unwrap();
        assert!(matches!(
            signed_perm_orbit(&seed, true),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn random_sphere_determinism_and_validation() {
        let a = random_sphere(4, 50, 7).unwrap();
        let b = random_sphere(4, 50, 7).unwrap();
        assert_eq!(a.config.points(), b.config.points());
        assert_on_sphere(&a.config);

        let c = random_sphere(4, 50, 8).unwrap();
        assert_ne!(a.config.points(), c.config.points());
    }

    #[test]
    fn random_orthogonal_is_orthogonal() {
        for n in [2usize, 5, 9] {
            let m = random_orthogonal(n, 42);
            for i in 0..n {
                for j in 0..n {
                    let ip = core::dot(&m[i], &m[j]);
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((ip - expected).abs() < 1e-12, "n={n} ({i},{j}) -> {ip}");
                }
            }
        }
    }

    #[test]
    fn generated_families_pass_their_flags() {
        let tol = Tolerances::default();
        let families: Vec<GeneratedConfig> = vec![
            regular_polygon(5).unwrap(),
            regular_polygon(6).unwrap(),
            regular_simplex(4).unwrap(),
            cross_polytope(4).unwrap(),
            hypercube(4).unwrap(),
            prism(3, 0.6).unwrap(),
            antiprism(4, 0.6).unwrap(),
            permutahedron(4).unwrap(),
            signed_perm_orbit(&random_unit_vector(3, 11).unwrap(), true).unwrap(),
        ];
        for g in &families {
            assert_on_sphere(&g.config);
            if g.known_transitive {
                let check = symmetry::check_transitive_necessary(&g.config, &tol);
                assert!(check.homogeneous, "{:?}: dev {}", g.family, check.max_deviation);
            }
            let antipodal = symmetry::check_antipodal(&g.config, &tol).unwrap();
            assert_eq!(
                antipodal.symmetric, g.known_antipodal,
                "{:?} flag mismatch (deviation {:.3e})",
                g.family, antipodal.worst_deviation
            );
        }
    }
}
