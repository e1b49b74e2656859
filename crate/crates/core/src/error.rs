use crate::exact::Integer;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero curvature: build a line with Circle::line instead")]
    ZeroCurvature,
    #[error("line normal ({0}, {1}) is not a unit vector")]
    NonUnitNormal(String, String),
    #[error("not a Descartes quadruple (defect {0})")]
    NotDescartes(Integer),
    #[error("all-zero quadruple has no divisor or orientation")]
    ZeroQuadruple,
    #[error("configuration is negatively oriented; negate it first")]
    NegativelyOriented,
    #[error("matrix entries are not all integers")]
    NotIntegral,
    #[error("not a valid augmented curvature-center matrix")]
    InvalidAugmented,
    #[error("m and n must have equal parity (got m={m}, n={n})")]
    ParityViolation { m: Integer, n: Integer },
    #[error("circles {0} and {1} of the triple are not tangent")]
    NotTangent(usize, usize),
    #[error("triple cannot be oriented consistently: {0}")]
    DegenerateTriple(&'static str),
    #[error("no exact rational square root of {0}")]
    NoRationalSqrt(String),
    #[error("enumeration budget is unbounded: {0}")]
    UnboundedBudget(&'static str),
    #[error("window is empty")]
    EmptyWindow,
    #[error("window is not symmetric under reflection in {0}")]
    AsymmetricWindow(&'static str),
    #[error("not a root quadruple: {0}")]
    NotRoot(&'static str),
    #[error("the (0,0,g,g) family has no unit-square location")]
    GroundFamily,
    #[error("circle is not in the enumerated set")]
    NotEnumerated,
    #[error("enumeration incomplete: {found} containing circles found, witness depth is {expected}")]
    IncompleteEnumeration { found: usize, expected: usize },
    #[error("modulus must be at least 2")]
    BadModulus,
    #[error("configuration does not reduce to an A/B ground form")]
    NotGroundForm,
    #[error("parse error: {0}")]
    Parse(String),
}
