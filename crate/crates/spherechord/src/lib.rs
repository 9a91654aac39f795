//! Numerical analysis of finite point configurations on unit n-spheres:
//! closed-form chord-sum identities checked against direct summation,
//! distinct-distance spectra of symmetric configurations, antipodal
//! symmetrization bounds, and fast frame-potential evaluation.
//!
//! Every closed form ships next to at least one independent computation
//! route; reports always carry both values and their discrepancy.

pub mod chords;
pub mod core;
pub mod error;
pub mod frames;
pub mod generators;
pub mod io;
pub mod spectrum;
pub mod symmetry;
pub mod verify;

pub use crate::core::{centroid, squared_distance, validate, Centroid, Point, PointConfig, Tolerances};
pub use crate::error::{Error, Result};
