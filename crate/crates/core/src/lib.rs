//! Exact-arithmetic engine for the affine and projective geometry of cevian
//! triangles.
//!
//! Every quantity is a rational number; there are no tolerances anywhere.
//! The crate builds the named points and maps attached to a triangle and a
//! point `P` (isotomic conjugate, isotomcomplement, cevian maps `T_P`, ...)
//! and checks the identities relating them as exact predicates.

#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod conic;
pub mod conjugacy;
pub mod error;
pub mod projective;
pub mod scalar;
pub mod theorems;
pub mod triangle;

pub use affine::{
    classify_homothety, compose, fixed_points, half_turn, invert, AffineMap, FixedPointKind,
    FixedPointStructure, HomothetyClass,
};
pub use conic::{
    circle_through_three, conic_through_five, inscribed_conic, steiner_circumellipse,
    steiner_point_sample, Conic, ConicKind,
};
pub use conjugacy::ConjugacyContext;
pub use error::{GeometryError, Result};
pub use projective::{
    collinear, concurrent, cross_ratio, harmonic_conjugate, join, meet, midpoint, signed_ratio,
    HLine, HPoint,
};
pub use scalar::Scalar;
pub use theorems::{
    build_configuration, check, run_suite, sample_configuration, sample_configurations,
    Configuration, Status, Stratum, SuiteSummary, TheoremId, TheoremReport,
};
pub use triangle::{
    anticevian_triangle, cevian_triangle, medial_and_anticomplementary, Bary, DegeneracyClass,
    Triangle,
};
