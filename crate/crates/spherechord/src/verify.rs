//! Self-verification suites: every closed form in the library evaluated
//! against its independent route(s) over generator families and seeded
//! random configurations. One [`CheckRow`] per check; the CLI `verify`
//! command renders them as a table or JSON.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chords;
use crate::core::{self, PointConfig, Tolerances};
use crate::frames;
use crate::generators;
use crate::spectrum;

/// Outcome of one named check: `pass` iff `residual ≤ tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckRow {
    fn new(name: &str, residual: f64, tolerance: f64) -> Self {
        CheckRow {
            name: name.to_string(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

const REL_TOL: f64 = 1e-9;
const SUM_TOL: f64 = 1e-8;

/// Seeded stream of (dimension, count) pairs and per-config seeds.
fn random_configs(count: usize, seed: u64, max_dim: usize, max_points: usize) -> Vec<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_dim);
            let v = rng.random_range(1..=max_points);
            let config_seed: u64 = rng.random();
            generators::random_sphere(n, v, config_seed)
                .expect("random sphere generation")
                .config
        })
        .collect()
}

fn antipodal_pair_config(dimension: usize, pairs: usize, seed: u64) -> PointConfig {
    let half = generators::random_sphere(dimension, pairs, seed)
        .expect("random sphere generation")
        .config;
    let mut points = half.points().to_vec();
    for p in half.points() {
        points.push(p.iter().map(|x| -x).collect());
    }
    PointConfig::new(dimension, points).expect("antipodal pair config")
}

fn rel_to(reference: f64, difference: f64) -> f64 {
    difference.abs() / reference.abs().max(1.0)
}

// ---------------------------------------------------------------------------
// chords
// ---------------------------------------------------------------------------

pub fn chords_suite(seed: u64) -> Vec<CheckRow> {
    let tol = Tolerances::default();
    let mut rows = Vec::new();

    // chord sum of the regular E-gon equals E², all three routes
    let mut worst = 0.0_f64;
    for edges in 2..=64usize {
        let config = generators::regular_polygon(edges).unwrap().config;
        let expected = (edges * edges) as f64;
        let direct = chords::chord_sum_direct(&config);
        let closed = chords::chord_sum_centroid(&config, &tol).unwrap();
        let (_, inertia) = chords::chord_sum_inertia(&config, &tol).unwrap();
        for value in [direct, closed, inertia] {
            worst = worst.max((value - expected).abs() / expected);
        }
    }
    rows.push(CheckRow::new("chords/polygon_chord_sum_equals_E2", worst, REL_TOL));

    let configs = random_configs(200, seed, 16, 200);

    let mut agreement = 0.0_f64;
    let mut lagrange = 0.0_f64;
    let mut rotation = 0.0_f64;
    let mut excess = 0.0_f64;
    for (i, config) in configs.iter().enumerate() {
        let direct = chords::chord_sum_direct(config);
        let closed = chords::chord_sum_centroid(config, &tol).unwrap();
        let (decomp, inertia) = chords::chord_sum_inertia(config, &tol).unwrap();
        agreement = agreement.max(rel_to(direct, direct - closed));
        agreement = agreement.max(rel_to(direct, direct - inertia));
        lagrange = lagrange.max(decomp.lagrange_residual.abs());

        let rot = generators::random_orthogonal(config.dimension(), seed ^ (i as u64));
        let rotated = config.apply_matrix(&rot).unwrap();
        rotation = rotation.max(rel_to(direct, chords::chord_sum_direct(&rotated) - direct));

        let v2 = (config.num_points() * config.num_points()) as f64;
        excess = excess.max((direct - v2) / v2);
    }
    rows.push(CheckRow::new("chords/random_three_route_agreement", agreement, REL_TOL));
    rows.push(CheckRow::new("chords/random_lagrange_residual", lagrange, REL_TOL));
    rows.push(CheckRow::new("chords/random_rotation_invariance", rotation, REL_TOL));
    rows.push(CheckRow::new(
        "chords/sum_never_exceeds_V2",
        excess.max(0.0),
        REL_TOL,
    ));

    let mut equality = 0.0_f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1111);
    for _ in 0..40 {
        let n = rng.random_range(2..=10usize);
        let pairs = rng.random_range(1..=60usize);
        let config = antipodal_pair_config(n, pairs, rng.random());
        let direct = chords::chord_sum_direct(&config);
        let v2 = (config.num_points() * config.num_points()) as f64;
        equality = equality.max((direct - v2).abs() / v2);
    }
    rows.push(CheckRow::new(
        "chords/V2_attained_by_antipodal_pairs",
        equality,
        REL_TOL,
    ));

    let mut duplication = 0.0_f64;
    for config in configs.iter().take(25) {
        let closed = chords::chord_sum_centroid(config, &tol).unwrap();
        let mut doubled = config.points().to_vec();
        doubled.extend(config.points().iter().cloned());
        let doubled = PointConfig::new(config.dimension(), doubled).unwrap();
        let closed2 = chords::chord_sum_centroid(&doubled, &tol).unwrap();
        duplication = duplication.max(rel_to(4.0 * closed, closed2 - 4.0 * closed));
    }
    rows.push(CheckRow::new(
        "chords/duplication_quadruples_closed_form",
        duplication,
        REL_TOL,
    ));

    rows
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

/// The antipodally symmetric, transitive families used by the symmetric-sum
/// checks.
fn symmetric_families(seed: u64) -> Vec<(String, PointConfig)> {
    let mut families = Vec::new();
    for edges in (4..=64usize).step_by(2) {
        families.push((
            format!("even_polygon_{edges}"),
            generators::regular_polygon(edges).unwrap().config,
        ));
    }
    for n in 1..=16usize {
        families.push((
            format!("cross_polytope_{n}"),
            generators::cross_polytope(n).unwrap().config,
        ));
    }
    for n in 1..=10usize {
        families.push((
            format!("hypercube_{n}"),
            generators::hypercube(n).unwrap().config,
        ));
    }
    for (label, angle) in [
        ("pi6", std::f64::consts::FRAC_PI_6),
        ("pi4", std::f64::consts::FRAC_PI_4),
        ("pi3", std::f64::consts::FRAC_PI_3),
    ] {
        families.push((
            format!("hexagonal_prism_{label}"),
            generators::prism(6, angle).unwrap().config,
        ));
    }
    for n in 2..=5usize {
        for s in 0..5u64 {
            let seed_point = generators::random_unit_vector(n, seed ^ (n as u64) << 8 ^ s).unwrap();
            families.push((
                format!("signed_perm_orbit_n{n}_s{s}"),
                generators::signed_perm_orbit(&seed_point, true).unwrap().config,
            ));
        }
    }
    families
}

/// Non-symmetric transitive families with origin centroids, for the bounds
/// checks that go through `symmetrization_bounds`.
fn bounded_families() -> Vec<(String, PointConfig)> {
    let mut families = Vec::new();
    for n in 2..=8usize {
        families.push((
            format!("simplex_{n}"),
            generators::regular_simplex(n).unwrap().config,
        ));
    }
    let angles = [
        ("pi6", std::f64::consts::FRAC_PI_6),
        ("pi4", std::f64::consts::FRAC_PI_4),
        ("pi3", std::f64::consts::FRAC_PI_3),
    ];
    for base in [3usize, 5, 7] {
        for (label, angle) in angles {
            families.push((
                format!("prism_{base}_{label}"),
                generators::prism(base, angle).unwrap().config,
            ));
        }
    }
    for base in [4usize, 6, 8] {
        for (label, angle) in angles {
            families.push((
                format!("antiprism_{base}_{label}"),
                generators::antiprism(base, angle).unwrap().config,
            ));
        }
    }
    families
}

pub fn spectrum_suite(seed: u64) -> Vec<CheckRow> {
    let tol = Tolerances::default();
    let mut rows = Vec::new();

    // odd polygons: sum of distinct squared lengths equals E
    let mut worst = 0.0_f64;
    for edges in (3..=31usize).step_by(2) {
        let config = generators::regular_polygon(edges).unwrap().config;
        let s = spectrum::distance_spectrum(&config, &tol).unwrap();
        worst = worst.max((s.sum_of_squares - edges as f64).abs());
    }
    rows.push(CheckRow::new("spectrum/odd_polygon_distinct_sum_equals_E", worst, SUM_TOL));

    // symmetric transitive families: Σd² = 2k+2, pairing, diameter present
    let mut sum_residual = 0.0_f64;
    let mut pairing_residual = 0.0_f64;
    let mut diameter_missing = 0usize;
    for (name, config) in symmetric_families(seed) {
        let report = spectrum::check_symmetric_sum(&config, &tol)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        sum_residual = sum_residual.max(report.residual);
        pairing_residual = pairing_residual.max(report.pairing.max_residual);
        if !report.spectrum.has_diameter {
            diameter_missing += 1;
        }
    }
    rows.push(CheckRow::new("spectrum/symmetric_sum_equals_2k_plus_2", sum_residual, SUM_TOL));
    rows.push(CheckRow::new("spectrum/pythagorean_pairing", pairing_residual, SUM_TOL));
    rows.push(CheckRow::new(
        "spectrum/diameter_present_in_symmetric_spectra",
        diameter_missing as f64,
        0.5,
    ));

    // the flagship triangular prism at polar angle π/4
    let prism = generators::prism(3, std::f64::consts::FRAC_PI_4).unwrap().config;
    let s = spectrum::distance_spectrum(&prism, &tol).unwrap();
    let mut prism_residual = (s.k as f64 - 3.0).abs();
    for (got, want) in s.squared_lengths.iter().zip([1.5, 2.0, 3.5]) {
        prism_residual = prism_residual.max((got - want).abs());
    }
    let bounds = spectrum::symmetrization_bounds(&prism, &tol).unwrap();
    let mut bound_residual = (bounds.r as f64 - 2.0).abs();
    bound_residual = bound_residual.max((bounds.antisym_spectrum.k as f64 - 6.0).abs());
    bound_residual = bound_residual.max((bounds.lower_bound - 2.0).abs());
    bound_residual = bound_residual.max((bounds.upper_bound - 10.0).abs());
    bound_residual = bound_residual.max((bounds.sum_of_squares - 7.0).abs());
    rows.push(
        CheckRow::new("spectrum/triangular_prism_pi4_spectrum", prism_residual, SUM_TOL)
            .with_detail(format!(
                "k={} squared_lengths={:?}",
                s.k, s.squared_lengths
            )),
    );
    rows.push(
        CheckRow::new("spectrum/triangular_prism_pi4_bounds", bound_residual, SUM_TOL)
            .with_detail(format!(
                "k={} r={} sum={} bounds=[{}, {}]",
                bounds.original_k,
                bounds.r,
                bounds.sum_of_squares,
                bounds.lower_bound,
                bounds.upper_bound
            )),
    );

    // non-symmetric transitive families: r ≤ k and 2k−2r ≤ Σ ≤ 2k+2r,
    // and AntiSym has exactly k+r+1 distinct lengths
    let mut bound_violation = 0.0_f64;
    let mut r_exceeds_k = 0usize;
    let mut count_mismatch = 0usize;
    for (name, config) in bounded_families() {
        let report = spectrum::symmetrization_bounds(&config, &tol)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        if report.r > report.original_k {
            r_exceeds_k += 1;
        }
        let sum = report.sum_of_squares;
        bound_violation = bound_violation
            .max(report.lower_bound - sum)
            .max(sum - report.upper_bound);
        if report.antisym_spectrum.k != report.original_k + report.r + 1 {
            count_mismatch += 1;
        }
    }
    rows.push(CheckRow::new(
        "spectrum/bounds_hold_for_transitive_families",
        bound_violation.max(0.0),
        SUM_TOL,
    ));
    rows.push(CheckRow::new("spectrum/r_at_most_k", r_exceeds_k as f64, 0.5));
    rows.push(CheckRow::new(
        "spectrum/antisym_distinct_count_k_plus_r_plus_1",
        count_mismatch as f64,
        0.5,
    ));

    // permutation orbits of (1..n)/‖·‖: transitive, not antipodally
    // symmetric, centroid off origin — r and k from the two spectra directly
    let mut orbit_violation = 0.0_f64;
    let mut orbit_detail = Vec::new();
    for n in 3..=5usize {
        let mut seed_point: Vec<f64> = (1..=n).map(|i| i as f64).collect();
        let norm = (seed_point.iter().map(|x| x * x).sum::<f64>()).sqrt();
        for x in seed_point.iter_mut() {
            *x /= norm;
        }
        let orbit = generators::signed_perm_orbit(&seed_point, false).unwrap().config;
        let s = spectrum::distance_spectrum(&orbit, &tol).unwrap();
        let antisym = spectrum::antipodal_symmetrize(&orbit, &tol).unwrap();
        let sa = spectrum::distance_spectrum(&antisym, &tol).unwrap();
        let r = sa
            .squared_lengths
            .iter()
            .filter(|&&v| (v - 4.0).abs() > tol.dedup_tol)
            .filter(|&&v| !s.squared_lengths.iter().any(|&o| (v - o).abs() <= tol.dedup_tol))
            .count();
        let (k, sum) = (s.k, s.sum_of_squares);
        if r > k {
            orbit_violation = orbit_violation.max(1.0);
        }
        orbit_violation = orbit_violation
            .max(2.0 * (k as f64 - r as f64) - sum)
            .max(sum - 2.0 * (k as f64 + r as f64));
        orbit_detail.push(format!("n={n}: k={k} r={r} sum={sum:.6}"));
    }
    rows.push(
        CheckRow::new(
            "spectrum/permutation_orbit_bounds",
            orbit_violation.max(0.0),
            SUM_TOL,
        )
        .with_detail(orbit_detail.join("; ")),
    );

    // dedup stability: perturbing coordinates by dedup_tol/100 leaves k alone
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2222);
    let mut k_changes = 0usize;
    for config in [
        generators::regular_polygon(7).unwrap().config,
        generators::regular_polygon(6).unwrap().config,
        generators::cross_polytope(4).unwrap().config,
        generators::hypercube(3).unwrap().config,
        generators::prism(3, std::f64::consts::FRAC_PI_4).unwrap().config,
        generators::regular_simplex(4).unwrap().config,
    ] {
        let k_before = spectrum::distance_spectrum(&config, &tol).unwrap().k;
        let amplitude = tol.dedup_tol / 100.0;
        let points = config
            .points()
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| x + rng.random_range(-1.0..1.0) * amplitude)
                    .collect()
            })
            .collect();
        let perturbed = PointConfig::new(config.dimension(), points).unwrap();
        if spectrum::distance_spectrum(&perturbed, &tol).unwrap().k != k_before {
            k_changes += 1;
        }
    }
    rows.push(CheckRow::new("spectrum/dedup_stability_small_perturbation", k_changes as f64, 0.5));

    rows
}

// ---------------------------------------------------------------------------
// frames
// ---------------------------------------------------------------------------

pub fn frames_suite(seed: u64) -> Vec<CheckRow> {
    let tol = Tolerances::default();
    let mut rows = Vec::new();

    let mut triple = 0.0_f64;
    let mut lower_bound = 0.0_f64;
    for config in random_configs(100, seed ^ 0x3333, 16, 200) {
        let report = frames::analyze_frames(&config, &tol).unwrap();
        triple = triple.max(rel_to(report.fp_naive, report.discrepancy));
        let floor = (config.num_points() * config.num_points()) as f64 / config.dimension() as f64;
        lower_bound = lower_bound.max(floor - report.fp_naive);
    }
    rows.push(CheckRow::new("frames/triple_equivalence_random", triple, REL_TOL));
    rows.push(CheckRow::new(
        "frames/fp_at_least_V2_over_n",
        lower_bound.max(0.0),
        REL_TOL,
    ));

    let mut basis_residual = 0.0_f64;
    let mut cross_residual = 0.0_f64;
    let mut tight_failures = 0usize;
    for n in 1..=16usize {
        let basis = generators::cross_polytope(n).unwrap().config; // ±e_i
        let cross_fp = frames::frame_potential_naive(&basis, &tol).unwrap();
        cross_residual = cross_residual.max((cross_fp - 4.0 * n as f64).abs());
        if !frames::is_tight_frame(&basis, &tol).unwrap() {
            tight_failures += 1;
        }

        let points = (0..n)
            .map(|i| {
                let mut p = vec![0.0; n];
                p[i] = 1.0;
                p
            })
            .collect();
        let basis = PointConfig::new(n, points).unwrap();
        let fp = frames::frame_potential_naive(&basis, &tol).unwrap();
        basis_residual = basis_residual.max((fp - n as f64).abs());
        if !frames::is_tight_frame(&basis, &tol).unwrap() {
            tight_failures += 1;
        }
    }
    rows.push(CheckRow::new("frames/orthonormal_basis_fp_equals_n", basis_residual, 1e-12));
    rows.push(CheckRow::new("frames/cross_polytope_fp_equals_4n", cross_residual, REL_TOL));
    rows.push(CheckRow::new("frames/tight_families_detected", tight_failures as f64, 0.5));

    let mut unit_norm = 0.0_f64;
    let mut pairwise = 0.0_f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4444);
    for _ in 0..200 {
        let n = rng.random_range(2..=12usize);
        let p = generators::random_unit_vector(n, rng.random()).unwrap();
        let q = generators::random_unit_vector(n, rng.random()).unwrap();
        let outer_norm = |a: &[f64]| -> f64 {
            let mut acc = 0.0;
            for x in a {
                for y in a {
                    acc += (x * y) * (x * y);
                }
            }
            acc.sqrt()
        };
        unit_norm = unit_norm.max((outer_norm(&p) - 1.0).abs());

        let mut frob_sq = 0.0;
        for j in 0..n {
            for k in 0..n {
                let d = p[j] * p[k] - q[j] * q[k];
                frob_sq += d * d;
            }
        }
        let ip = core::dot(&p, &q);
        pairwise = pairwise.max((frob_sq - (2.0 - 2.0 * ip * ip)).abs());
    }
    rows.push(CheckRow::new("frames/outer_product_unit_norm", unit_norm, 1e-12));
    rows.push(CheckRow::new("frames/outer_product_distance_identity", pairwise, 1e-12));

    let mut invariance = 0.0_f64;
    for (i, config) in random_configs(20, seed ^ 0x5555, 10, 80).iter().enumerate() {
        let fp = frames::frame_potential_naive(config, &tol).unwrap();
        let rot = generators::random_orthogonal(config.dimension(), seed ^ (i as u64) << 4);
        let rotated = config.apply_matrix(&rot).unwrap();
        let fp_rot = frames::frame_potential_naive(&rotated, &tol).unwrap();
        invariance = invariance.max(rel_to(fp, fp - fp_rot));
    }
    rows.push(CheckRow::new("frames/fp_orthogonal_invariance", invariance, REL_TOL));

    // the near-miss scalar: (Σ all coordinates)² is not the frame potential
    let basis = PointConfig::new(2, vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
    let fp = frames::frame_potential_naive(&basis, &tol).unwrap();
    let grand: f64 = basis.points().iter().flatten().sum();
    let residual = (fp - 2.0).abs().max((grand * grand - 4.0).abs());
    rows.push(
        CheckRow::new("frames/grand_sum_square_counterexample", residual, 1e-12).with_detail(
            format!("fp={fp} grand_sum_square={} (values must differ)", grand * grand),
        ),
    );

    rows
}

pub fn all_suites(seed: u64) -> Vec<CheckRow> {
    let mut rows = chords_suite(seed);
    rows.extend(spectrum_suite(seed));
    rows.extend(frames_suite(seed));
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    // The full suites run in the acceptance tests; here just pin the row
    // plumbing on the cheapest suite.
    #[test]
    fn chords_suite_rows_pass() {
        let rows = chords_suite(0);
        assert!(!rows.is_empty());
        for row in &rows {
            assert!(row.pass, "{}: residual {} > {}", row.name, row.residual, row.tolerance);
        }
    }

    #[test]
    fn check_row_pass_logic() {
        assert!(CheckRow::new("x", 0.5, 1.0).pass);
        assert!(!CheckRow::new("x", 2.0, 1.0).pass);
    }
}
