use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::circle::Circle;
use super::forms;
use super::matrix::RatMatrix;
use super::rational::{as_integer, gcd_all, int, rat, Integer, Rational};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
        })
    }
}

/// `(Σb)² − 2·Σb²`; zero exactly on Descartes quadruples.
pub fn descartes_defect(b: &[Integer; 4]) -> Integer {
    let s: Integer = b.iter().sum();
    let sq: Integer = b.iter().map(|x| x * x).sum();
    &s * &s - int(2) * sq
}

/// Four signed curvatures satisfying the Descartes equation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescartesQuadruple(pub [Integer; 4]);

impl DescartesQuadruple {
    pub fn new(b: [Integer; 4]) -> Result<Self> {
        let d = descartes_defect(&b);
        if !d.is_zero() {
            return Err(Error::NotDescartes(d));
        }
        if b.iter().all(Zero::is_zero) {
            return Err(Error::ZeroQuadruple);
        }
        Ok(DescartesQuadruple(b))
    }

    pub fn from_i64(b: [i64; 4]) -> Result<Self> {
        Self::new(b.map(int))
    }

    pub fn curvatures(&self) -> &[Integer; 4] {
        &self.0
    }

    pub fn divisor(&self) -> Integer {
        gcd_all(&self.0)
    }

    pub fn orientation(&self) -> Orientation {
        let s: Integer = self.0.iter().sum();
        if s.is_positive() {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }

    pub fn sum(&self) -> Integer {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Self {
        DescartesQuadruple(self.0.clone().map(|x| -x))
    }

    pub fn sorted(&self) -> Self {
        let mut b = self.0.clone();
        b.sort();
        DescartesQuadruple(b)
    }
}

impl fmt::Display for DescartesQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// The 4×3 curvature-center matrix, rows `(b, bx, by)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConfigMatrix(pub [[Rational; 3]; 4]);

impl ConfigMatrix {
    pub fn from_i64(rows: [[i64; 3]; 4]) -> Self {
        ConfigMatrix(rows.map(|r| r.map(rat)))
    }

    pub fn curvatures(&self) -> [Rational; 4] {
        std::array::from_fn(|i| self.0[i][0].clone())
    }

    /// Adds the cocurvature column. Circle rows get `(bx² + by² − 1)/b`; a
    /// line row is pinned by its tangency (`⟨l, w_k⟩ = −1`) with a circle row.
    pub fn to_augmented(&self) -> Result<AugmentedMatrix> {
        let k = (0..4).find(|&k| !self.0[k][0].is_zero()).ok_or(Error::InvalidAugmented)?;
        let [bk, xk, yk] = &self.0[k];
        let rows = std::array::from_fn(|i| {
            let [b, x, y] = self.0[i].clone();
            let bbar = if b.is_zero() {
                rat(2) * (&x * xk + &y * yk + rat(1)) / bk
            } else {
                (&x * &x + &y * &y - rat(1)) / &b
            };
            Circle::new(bbar, b, x, y)
        });
        AugmentedMatrix::new(rows)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_integer())
    }

    pub fn permute_rows(&self, perm: &[usize; 4]) -> Self {
        ConfigMatrix(std::array::from_fn(|k| self.0[perm[k]].clone()))
    }

    pub fn neg(&self) -> Self {
        ConfigMatrix(self.0.clone().map(|r| r.map(|x| -x)))
    }
}

/// `Wᵀ Q_D W = Q_W`, exactly.
pub fn validate_augmented(w: &RatMatrix) -> bool {
    w.congruence(&forms::q_d()) == forms::q_w()
}

/// Ordered, oriented Descartes configuration as its augmented matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AugmentedMatrix {
    rows: [Circle; 4],
}

impl AugmentedMatrix {
    pub fn new(rows: [Circle; 4]) -> Result<Self> {
        let w = AugmentedMatrix { rows };
        if w.is_valid() {
            Ok(w)
        } else {
            Err(Error::InvalidAugmented)
        }
    }

    pub fn from_i64(rows: [[i64; 4]; 4]) -> Result<Self> {
        Self::new(rows.map(Circle::from_i64))
    }

    pub fn from_matrix(m: &RatMatrix) -> Result<Self> {
        Self::new(m.0.clone().map(Circle::from_array))
    }

    /// Caller guarantees validity, e.g. a group image of a valid matrix.
    pub(crate) fn from_rows_unchecked(rows: [Circle; 4]) -> Self {
        debug_assert!(AugmentedMatrix { rows: rows.clone() }.is_valid());
        AugmentedMatrix { rows }
    }

    /// The strip configuration: lines `y = ±1` and unit circles at `(±1, 0)`.
    pub fn d1() -> Self {
        Self::from_i64([[2, 0, 0, 1], [2, 0, 0, -1], [0, 1, 1, 0], [0, 1, -1, 0]]).unwrap()
    }

    pub fn rows(&self) -> &[Circle; 4] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Circle {
        &self.rows[i]
    }

    pub fn into_rows(self) -> [Circle; 4] {
        self.rows
    }

    pub fn matrix(&self) -> RatMatrix {
        super::matrix::Mat4(self.rows.clone().map(|c| c.to_array()))
    }

    pub fn is_valid(&self) -> bool {
        validate_augmented(&self.matrix())
    }

    pub fn curvatures(&self) -> [Rational; 4] {
        std::array::from_fn(|i| self.rows[i].b.clone())
    }

    pub fn quadruple(&self) -> Result<DescartesQuadruple> {
        let b = self.curvatures();
        let mut out = [int(0), int(0), int(0), int(0)];
        for (o, x) in out.iter_mut().zip(&b) {
            *o = as_integer(x).ok_or(Error::NotIntegral)?;
        }
        DescartesQuadruple::new(out)
    }

    pub fn orientation(&self) -> Orientation {
        let s: Rational = self.curvatures().iter().sum();
        if s.is_positive() {
            Orientation::Positive
        } else {
            Orientation::Negative
        }
    }

    pub fn config(&self) -> ConfigMatrix {
        ConfigMatrix(self.rows.clone().map(|c| [c.b, c.bx, c.by]))
    }

    pub fn neg(&self) -> Self {
        AugmentedMatrix { rows: self.rows.clone().map(|c| c.neg()) }
    }

    pub fn permute_rows(&self, perm: &[usize; 4]) -> Self {
        AugmentedMatrix { rows: std::array::from_fn(|k| self.rows[perm[k]].clone()) }
    }

    pub fn is_strongly_integral(&self) -> bool {
        self.rows.iter().all(Circle::is_strongly_integral)
    }

    pub fn is_super_integral(&self) -> bool {
        self.rows.iter().all(Circle::is_super_integral)
    }

    /// gcd of each column `(bbar, b, bx, by)`; `None` unless super-integral.
    pub fn column_gcds(&self) -> Option<[Integer; 4]> {
        let m = self.matrix();
        let mut out: [Integer; 4] = std::array::from_fn(|_| int(0));
        for (j, o) in out.iter_mut().enumerate() {
            let col: Option<Vec<Integer>> = (0..4).map(|i| as_integer(&m.0[i][j])).collect();
            *o = gcd_all(&col?);
        }
        Some(out)
    }

    pub fn transform(&self, g: &super::circle::Isometry) -> Self {
        AugmentedMatrix { rows: self.rows.clone().map(|c| c.transform(g)) }
    }
}

impl fmt::Display for AugmentedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Exact center-distance test for two circles given as curvature and center.
pub fn tangent_by_distance(
    b1: &Rational,
    z1: (&Rational, &Rational),
    b2: &Rational,
    z2: (&Rational, &Rational),
) -> bool {
    let d2 = (z1.0 - z2.0) * (z1.0 - z2.0) + (z1.1 - z2.1) * (z1.1 - z2.1);
    let (r1, r2) = (b1.abs().recip(), b2.abs().recip());
    d2 == (&r1 + &r2) * (&r1 + &r2) || d2 == (&r1 - &r2) * (&r1 - &r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::Mat4;

    #[test]
    fn defects() {
        let d = |b: [i64; 4]| descartes_defect(&b.map(int));
        assert_eq!(d([0, 0, 1, 1]), int(0));
        assert_eq!(d([-1, 2, 2, 3]), int(0));
        assert_eq!(d([-6, 11, 14, 15]), int(0));
        assert_eq!(d([-6, 10, 15, 19]), int(0));
        assert_eq!(d([-6, 7, 42, 43]), int(0));
        assert_eq!(d([-6, 10, 11, 14]), int(-65));
        assert!(matches!(DescartesQuadruple::from_i64([-6, 10, 11, 14]), Err(Error::NotDescartes(_))));
        assert_eq!(DescartesQuadruple::from_i64([0; 4]), Err(Error::ZeroQuadruple));
    }

    #[test]
    fn divisor_and_orientation() {
        let q = DescartesQuadruple::from_i64([0, 0, 2, 2]).unwrap();
        assert_eq!((q.divisor(), q.orientation()), (int(2), Orientation::Positive));
        let q = DescartesQuadruple::from_i64([-6, 11, 14, 15]).unwrap();
        assert_eq!((q.divisor(), q.orientation()), (int(1), Orientation::Positive));
        let q = DescartesQuadruple::from_i64([0, 0, -1, -1]).unwrap();
        assert_eq!((q.divisor(), q.orientation()), (int(1), Orientation::Negative));
    }

    #[test]
    fn strip_configuration_is_valid() {
        let w = AugmentedMatrix::d1();
        assert!(w.is_valid());
        assert_eq!(w.quadruple().unwrap().0, [0, 0, 1, 1].map(int));
        assert!(!validate_augmented(&Mat4::from_fn(|_, _| rat(0))));
        assert_eq!(w.config().to_augmented().unwrap(), w);
    }

    #[test]
    fn lifting_with_lines() {
        // (0,0,2,2): lines y = ±1/2 and radius-1/2 circles at (±1/2, 0).
        let m = ConfigMatrix::from_i64([[0, 0, 1], [0, 0, -1], [2, 1, 0], [2, -1, 0]]);
        let w = m.to_augmented().unwrap();
        assert_eq!(w.row(0).line_offset(), Some(crate::exact::rational::frac(1, 2)));
        assert!(ConfigMatrix::from_i64([[1, 0, 0], [1, 0, 0], [1, 0, 0], [1, 0, 0]]).to_augmented().is_err());
    }

    #[test]
    fn distance_tangency() {
        let (o, one) = (rat(0), rat(1));
        assert!(tangent_by_distance(&rat(1), (&one, &o), &rat(1), (&-one.clone(), &o)));
        assert!(!tangent_by_distance(&rat(1), (&one, &o), &rat(2), (&-one.clone(), &o)));
    }
}
