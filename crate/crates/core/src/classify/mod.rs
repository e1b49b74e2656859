//! Reduction to ground and root quadruples, reduced forms and their labels,
//! and super-integrality.

mod forms;
mod reduction;
mod superint;

pub use forms::{
    base_forms, canonical_augmented, canonical_config, decorated_forms, decorations, kappa, reduced_form, Family,
    Kappa, OrbitLabel, ReducedForm,
};
pub use reduction::{
    reduce_to_ground, root_quadruple, root_quadruples_with_curvature, root_reduction, Reduction, RootQuadruple,
};
pub use superint::{
    orbit_census, super_integrality_class, Census, CensusRow, IntegralityStatus, SuperIntegralityClass,
};
