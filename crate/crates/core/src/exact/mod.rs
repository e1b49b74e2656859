//! Exact rationals, circles, quadruples and configuration matrices.

mod circle;
mod config;
pub mod forms;
mod matrix;
pub mod rational;

pub use circle::{pair_relation, Circle, Geometry, Isometry, PairRelation};
pub use config::{
    descartes_defect, tangent_by_distance, validate_augmented, AugmentedMatrix, ConfigMatrix, DescartesQuadruple,
    Orientation,
};
pub use matrix::{IntMatrix, Mat4, RatMatrix, Ring};
pub use rational::{Integer, Rational};

/// Builds a circle row from curvature and center.
pub fn circle_to_row(b: Rational, center: (Rational, Rational)) -> crate::Result<Circle> {
    Circle::from_center(b, center.0, center.1)
}

/// Inverse of [`circle_to_row`] together with the line reading for `b = 0`.
pub fn row_to_circle(c: &Circle) -> Geometry {
    c.geometry()
}
