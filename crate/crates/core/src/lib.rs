//! Exact construction, reduction, classification, enumeration and rendering of
//! Apollonian circle packings and super-packings.
//!
//! Everything is computed over arbitrary-precision rationals. A Descartes
//! configuration is carried as its 4×4 augmented curvature-center matrix
//! (rows `(bbar, b, b·x, b·y)`), and the super-Apollonian group acts on it by
//! left multiplication with integer matrices.

pub mod classify;
pub mod completion;
pub mod enumerate;
mod error;
pub mod exact;
pub mod group;
pub mod render;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{
    descartes_defect, forms, pair_relation, AugmentedMatrix, Circle, ConfigMatrix, DescartesQuadruple, Geometry,
    Integer, Isometry, Mat4, Orientation, PairRelation, Rational,
};
