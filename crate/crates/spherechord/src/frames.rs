//! Frame-potential evaluation by three routes, plus tight-frame detection.
//!
//! The frame potential of unit vectors P_1..P_V is the ordered double sum
//! FP = Σ_i Σ_j ⟨P_i, P_j⟩² (diagonal included), Θ(nV²) to evaluate
//! directly. Two faster/independent routes follow from lifting each point to
//! its outer product P_iP_iᵀ, a unit vector of R^{n²} under the Frobenius
//! norm:
//!
//! * operator route: FP = ‖S‖_F² where S = Σ_i P_iP_iᵀ is the frame
//!   operator, Θ(n²V) + Θ(n²) — equivalently V²·d_F² with d_F the Frobenius
//!   norm of the mean outer product;
//! * lifted route: ‖PPᵀ − QQᵀ‖_F² = 2 − 2⟨P,Q⟩² turns the ordered sum of
//!   lifted squared distances into 2V² − 2FP, so FP = V² minus the
//!   unordered lifted chord sum.
//!
//! Beware one near-miss scalar: the squared grand sum of all coordinates,
//! (Σ_j Σ_i x_{j,i})², is NOT the frame potential — for the orthonormal
//! basis of R² it evaluates to 4 while FP = 2. The tests pin this
//! counterexample down.
//!
//! A unit-norm frame is tight exactly when S = (V/n)·I; FP then attains its
//! V²/n lower bound.

use serde::Serialize;

use crate::chords;
use crate::core::{self, PointConfig, Tolerances};
use crate::error::{Error, Result};

/// Dense row-major n×n matrix.
pub type Matrix = Vec<Vec<f64>>;

/// All three frame-potential routes, the frame operator, and tightness.
#[derive(Debug, Clone, Serialize)]
pub struct FrameReport {
    pub fp_naive: f64,
    pub fp_operator: f64,
    pub fp_lifted: f64,
    /// S = Σ_i P_iP_iᵀ, row-major.
    pub frame_operator: Matrix,
    /// S within tolerance of (V/n)·I entrywise.
    pub is_tight: bool,
    /// Max pairwise absolute difference among the three FP values.
    pub discrepancy: f64,
}

fn require_unit_frame(config: &PointConfig, tol: &Tolerances) -> Result<()> {
    config.require_unit_sphere_at_origin()?;
    core::require_on_sphere(config, tol)
}

/// Ordered double sum Σ_i Σ_j ⟨P_i,P_j⟩², i = j included. Θ(nV²).
pub fn frame_potential_naive(config: &PointConfig, tol: &Tolerances) -> Result<f64> {
    require_unit_frame(config, tol)?;
    let points = config.points();
    let mut acc = 0.0;
    for p in points {
        for q in points {
            let ip = core::dot(p, q);
            acc += ip * ip;
        }
    }
    Ok(acc)
}

/// The frame operator S = Σ_i P_iP_iᵀ, accumulated over the upper triangle
/// and mirrored. No sphere hypothesis needed for S itself.
#[allow(clippy::needless_range_loop)] // triangular index patterns
pub fn frame_operator(config: &PointConfig) -> Matrix {
    let n = config.dimension();
    let mut s = vec![vec![0.0; n]; n];
    for p in config.points() {
        for j in 0..n {
            for k in j..n {
                s[j][k] += p[j] * p[k];
            }
        }
    }
    for j in 0..n {
        for k in 0..j {
            s[j][k] = s[k][j];
        }
    }
    s
}

/// FP = ‖S‖_F², computed from the upper triangle in Θ(n²V) + Θ(n²).
#[allow(clippy::needless_range_loop)]
pub fn frame_potential_operator(config: &PointConfig, tol: &Tolerances) -> Result<(f64, Matrix)> {
    require_unit_frame(config, tol)?;
    let s = frame_operator(config);
    let n = config.dimension();
    let mut fp = 0.0;
    for j in 0..n {
        fp += s[j][j] * s[j][j];
        for k in (j + 1)..n {
            fp += 2.0 * s[j][k] * s[j][k];
        }
    }
    Ok((fp, s))
}

/// Third route: map each point to its flattened outer product in R^{n²}
/// (unit vectors under the Frobenius norm), take the unordered chord sum
/// there, and return V² − chord_sum.
pub fn frame_potential_lifted(config: &PointConfig, tol: &Tolerances) -> Result<f64> {
    require_unit_frame(config, tol)?;
    let n = config.dimension();
    let lifted_points: Vec<Vec<f64>> = config
        .points()
        .iter()
        .map(|p| {
            let mut flat = Vec::with_capacity(n * n);
            for j in 0..n {
                for k in 0..n {
                    flat.push(p[j] * p[k]);
                }
            }
            flat
        })
        .collect();
    let lifted = PointConfig::new(n * n, lifted_points)?;
    let v = config.num_points() as f64;
    Ok(v * v - chords::chord_sum_direct(&lifted))
}

/// True iff S is entrywise within `identity_tol·(V/n)` of (V/n)·I.
/// Fewer than n points cannot span R^n, hence cannot be tight.
pub fn is_tight_frame(config: &PointConfig, tol: &Tolerances) -> Result<bool> {
    require_unit_frame(config, tol)?;
    if config.num_points() < config.dimension() {
        return Err(Error::CannotSpan {
            points: config.num_points(),
            dimension: config.dimension(),
        });
    }
    let s = frame_operator(config);
    Ok(tight_against_operator(&s, config, tol))
}

#[allow(clippy::needless_range_loop)]
fn tight_against_operator(s: &Matrix, config: &PointConfig, tol: &Tolerances) -> bool {
    let n = config.dimension();
    let target = config.num_points() as f64 / n as f64;
    let budget = tol.identity_tol * target;
    for j in 0..n {
        for k in 0..n {
            let expected = if j == k { target } else { 0.0 };
            if (s[j][k] - expected).abs() > budget {
                return false;
            }
        }
    }
    true
}

/// All three routes plus tightness. V < n reports `is_tight = false` rather
/// than erroring (a rank-deficient S can never equal (V/n)·I).
pub fn analyze_frames(config: &PointConfig, tol: &Tolerances) -> Result<FrameReport> {
    let fp_naive = frame_potential_naive(config, tol)?;
    let (fp_operator, frame_operator) = frame_potential_operator(config, tol)?;
    let fp_lifted = frame_potential_lifted(config, tol)?;
    let is_tight = config.num_points() >= config.dimension()
        && tight_against_operator(&frame_operator, config, tol);
    let discrepancy = (fp_naive - fp_operator)
        .abs()
        .max((fp_naive - fp_lifted).abs())
        .max((fp_operator - fp_lifted).abs());
    Ok(FrameReport {
        fp_naive,
        fp_operator,
        fp_lifted,
        frame_operator,
        is_tight,
        discrepancy,
    })
}
