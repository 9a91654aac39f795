//! The combined analysis report: validation, symmetry checks, chord routes,
//! spectrum, frame potentials, and — when the relevant hypotheses hold — the
//! symmetric-sum identity or the symmetrization bounds.
//!
//! Identity failures and hypothesis violations inside a block are data, not
//! process failures: the block carries an `error` string and the run still
//! exits 0 unless `--strict` is set.

use serde::Serialize;

use spherechord::chords::{self, ChordReport};
use spherechord::core::{validate, PointConfig, Tolerances, ValidationReport};
use spherechord::frames::{self, FrameReport};
use spherechord::spectrum::{self, DistanceSpectrum, SymmetricSumReport, SymmetrizationReport};
use spherechord::symmetry::{self, SymmetryChecks};

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Block<T> {
    Value(T),
    Error { error: String },
}

impl<T> Block<T> {
    fn capture(result: spherechord::Result<T>, hypothesis_failures: &mut Vec<String>) -> Self {
        match result {
            Ok(value) => Block::Value(value),
            Err(e) => {
                if e.is_hypothesis_violation() {
                    hypothesis_failures.push(e.to_string());
                }
                Block::Error {
                    error: e.to_string(),
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub validation: ValidationReport,
    pub symmetry: SymmetryChecks,
    pub chords: Block<ChordReport>,
    pub spectrum: Block<DistanceSpectrum>,
    pub frames: Block<FrameReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetric_sum: Option<Block<SymmetricSumReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetrization: Option<Block<SymmetrizationReport>>,
}

/// Build the full report. The returned list holds the hypothesis violations
/// encountered (empty when everything applied cleanly).
pub fn analyze(config: &PointConfig, tol: &Tolerances) -> (AnalysisReport, Vec<String>) {
    let mut failures = Vec::new();

    let validation = validate(config, tol);
    let checks = symmetry::run_all_checks(config, tol);

    let chords = Block::capture(chords::analyze_chords(config, tol), &mut failures);
    let spectrum_block = Block::capture(spectrum::distance_spectrum(config, tol), &mut failures);
    let frames = Block::capture(frames::analyze_frames(config, tol), &mut failures);

    let on_unit_origin_sphere = config.is_unit_sphere_at_origin() && validation.all_on_sphere;
    let symmetric_sum = (on_unit_origin_sphere
        && checks.antipodal_symmetric
        && checks.distance_profile_homogeneous)
        .then(|| Block::capture(spectrum::check_symmetric_sum(config, tol), &mut failures));
    let symmetrization = (on_unit_origin_sphere
        && !checks.antipodal_symmetric
        && checks.distance_profile_homogeneous
        && checks.centroid_at_origin)
        .then(|| Block::capture(spectrum::symmetrization_bounds(config, tol), &mut failures));

    let report = AnalysisReport {
        validation,
        symmetry: checks,
        chords,
        spectrum: spectrum_block,
        frames,
        symmetric_sum,
        symmetrization,
    };
    (report, failures)
}
