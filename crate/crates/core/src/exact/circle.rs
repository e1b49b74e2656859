use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{rat, rational_text, serde_rational, Rational};
use crate::{Error, Result};

/// One oriented circle as a row `(bbar, b, bx, by)` of an augmented
/// curvature-center matrix.
///
/// For a circle of signed curvature `b ≠ 0` and center `z`, `(bx, by) = b·z`
/// and `bbar = b·|z|² − 1/b`. For a line `{p : n·p = h}` with unit normal `n`,
/// `b = 0`, `(bx, by) = n` and `bbar = 2h`. The interior of a line is the
/// open side `n·p > h`; a negative curvature marks the outside of a disk.
///
/// Derived ordering is lexicographic on `(bbar, b, bx, by)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Circle {
    #[serde(with = "serde_rational")]
    pub bbar: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    #[serde(with = "serde_rational")]
    pub bx: Rational,
    #[serde(with = "serde_rational")]
    pub by: Rational,
}

/// Euclidean reading of a row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Geometry {
    Circle { curvature: Rational, center: (Rational, Rational) },
    Line { normal: (Rational, Rational), offset: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairRelation {
    ExternallyTangent,
    InternallyTangent,
    Disjoint,
    Nested,
    Crossing,
    Equal,
}

impl Circle {
    pub fn new(bbar: Rational, b: Rational, bx: Rational, by: Rational) -> Self {
        Circle { bbar, b, bx, by }
    }

    pub fn from_array(r: [Rational; 4]) -> Self {
        let [bbar, b, bx, by] = r;
        Circle { bbar, b, bx, by }
    }

    pub fn from_i64(r: [i64; 4]) -> Self {
        Self::from_array(r.map(rat))
    }

    pub fn to_array(&self) -> [Rational; 4] {
        [self.bbar.clone(), self.b.clone(), self.bx.clone(), self.by.clone()]
    }

    /// Circle with signed curvature `b ≠ 0` and center `(x, y)`.
    pub fn from_center(b: Rational, x: Rational, y: Rational) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::ZeroCurvature);
        }
        let bx = &b * &x;
        let by = &b * &y;
        let bbar = (&bx * &bx + &by * &by - Rational::one()) / &b;
        Ok(Circle { bbar, b, bx, by })
    }

    /// Line `{p : n·p = h}` with interior `n·p > h`.
    pub fn line(nx: Rational, ny: Rational, h: Rational) -> Result<Self> {
        if &nx * &nx + &ny * &ny != Rational::one() {
            return Err(Error::NonUnitNormal(rational_text(&nx), rational_text(&ny)));
        }
        Ok(Circle { bbar: rat(2) * h, b: Rational::zero(), bx: nx, by: ny })
    }

    pub fn is_line(&self) -> bool {
        self.b.is_zero()
    }

    /// Center `(bx/b, by/b)`, or `None` for a line.
    pub fn center(&self) -> Option<(Rational, Rational)> {
        (!self.b.is_zero()).then(|| (&self.bx / &self.b, &self.by / &self.b))
    }

    /// Unsigned radius, or `None` for a line.
    pub fn radius(&self) -> Option<Rational> {
        (!self.b.is_zero()).then(|| self.b.abs().recip())
    }

    /// Line offset `h` with the line being `{n·p = h}`; `None` for circles.
    pub fn line_offset(&self) -> Option<Rational> {
        self.b.is_zero().then(|| &self.bbar / rat(2))
    }

    pub fn geometry(&self) -> Geometry {
        match self.center() {
            Some(center) => Geometry::Circle { curvature: self.b.clone(), center },
            None => Geometry::Line { normal: (self.bx.clone(), self.by.clone()), offset: &self.bbar / rat(2) },
        }
    }

    /// Bilinear form whose diagonal is 1 on every genuine oriented circle;
    /// equals the inversive distance of the two circles.
    pub fn inversive(&self, o: &Circle) -> Rational {
        &self.bx * &o.bx + &self.by * &o.by - (&self.bbar * &o.b + &self.b * &o.bbar) / rat(2)
    }

    /// `bx² + by² − bbar·b = 1`, i.e. the row really is a circle or a line.
    pub fn is_valid(&self) -> bool {
        self.inversive(self).is_one()
    }

    pub fn neg(&self) -> Circle {
        Circle { bbar: -&self.bbar, b: -&self.b, bx: -&self.bx, by: -&self.by }
    }

    pub fn add(&self, o: &Circle) -> Circle {
        Circle { bbar: &self.bbar + &o.bbar, b: &self.b + &o.b, bx: &self.bx + &o.bx, by: &self.by + &o.by }
    }

    pub fn sub(&self, o: &Circle) -> Circle {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Rational) -> Circle {
        Circle { bbar: &self.bbar * s, b: &self.b * s, bx: &self.bx * s, by: &self.by * s }
    }

    /// Orientation-free key: the same geometric circle always yields the
    /// same key. Disks keep `b > 0`; lines take the normal with `by > 0`, or
    /// `bx > 0` when `by = 0`.
    pub fn geometric_key(&self) -> Circle {
        let flip = if self.b.is_zero() {
            self.by.is_negative() || (self.by.is_zero() && self.bx.is_negative())
        } else {
            self.b.is_negative()
        };
        if flip {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn same_geometric_circle(&self, o: &Circle) -> bool {
        self.geometric_key() == o.geometric_key()
    }

    pub fn is_strongly_integral(&self) -> bool {
        self.b.is_integer() && self.bx.is_integer() && self.by.is_integer()
    }

    pub fn is_super_integral(&self) -> bool {
        self.is_strongly_integral() && self.bbar.is_integer()
    }

    /// Whether the closed interior of `self` contains the closed interior of
    /// `inner` (internal tangency allowed).
    pub fn contains(&self, inner: &Circle) -> bool {
        if self.same_geometric_circle(inner) || self.inversive(inner) < Rational::one() {
            return false;
        }
        let (a, b) = (&self.b, &inner.b);
        if a.is_positive() {
            b.is_positive() && b > a
        } else if a.is_zero() {
            if b.is_positive() {
                true
            } else if b.is_zero() {
                // Parallel with the same normal: the inner line sits deeper.
                inner.bbar > self.bbar
            } else {
                false
            }
        } else {
            !b.is_negative() || b > a
        }
    }

    /// Image under an isometry of the plane.
    pub fn transform(&self, g: &Isometry) -> Circle {
        if self.b.is_zero() {
            let n = g.apply_linear((&self.bx, &self.by));
            let h = &self.bbar / rat(2) + &n.0 * &g.tx + &n.1 * &g.ty;
            Circle { bbar: rat(2) * h, b: Rational::zero(), bx: n.0, by: n.1 }
        } else {
            let (x, y) = self.center().unwrap();
            let (x, y) = g.apply((&x, &y));
            Circle::from_center(self.b.clone(), x, y).unwrap()
        }
    }
}

impl fmt::Display for Circle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            rational_text(&self.bbar),
            rational_text(&self.b),
            rational_text(&self.bx),
            rational_text(&self.by)
        )
    }
}

/// Relation of two oriented circles read off the inversive product `I`:
/// `I = −1` external tangency, `I = 1` internal tangency, `|I| < 1` crossing,
/// `I < −1` disjoint interiors, `I > 1` nested interiors.
pub fn pair_relation(c1: &Circle, c2: &Circle) -> PairRelation {
    if c1.same_geometric_circle(c2) {
        return PairRelation::Equal;
    }
    let i = c1.inversive(c2);
    let one = Rational::one();
    if i == -one.clone() {
        PairRelation::ExternallyTangent
    } else if i == one {
        PairRelation::InternallyTangent
    } else if i < -one.clone() {
        PairRelation::Disjoint
    } else if i > one {
        PairRelation::Nested
    } else {
        PairRelation::Crossing
    }
}

/// `p ↦ A·p + t` where `A` is a signed permutation matrix: optional swap of
/// coordinates followed by per-axis signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Isometry {
    pub swap: bool,
    pub sx: i8,
    pub sy: i8,
    pub tx: Rational,
    pub ty: Rational,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry { swap: false, sx: 1, sy: 1, tx: Rational::zero(), ty: Rational::zero() }
    }

    pub fn translation(tx: Rational, ty: Rational) -> Self {
        Isometry { tx, ty, ..Self::identity() }
    }

    pub fn linear(swap: bool, sx: i8, sy: i8) -> Self {
        Isometry { swap, sx, sy, ..Self::identity() }
    }

    pub fn apply_linear(&self, (x, y): (&Rational, &Rational)) -> (Rational, Rational) {
        let (u, v) = if self.swap { (y, x) } else { (x, y) };
        let u = if self.sx < 0 { -u } else { u.clone() };
        let v = if self.sy < 0 { -v } else { v.clone() };
        (u, v)
    }

    pub fn apply(&self, p: (&Rational, &Rational)) -> (Rational, Rational) {
        let (u, v) = self.apply_linear(p);
        (u + &self.tx, v + &self.ty)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &Isometry) -> Isometry {
        let (a, b) = (self.matrix(), first.matrix());
        let m: [[i8; 2]; 2] = std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]));
        let (swap, sx, sy) = if m[0][0] != 0 { (false, m[0][0], m[1][1]) } else { (true, m[0][1], m[1][0]) };
        let (tx, ty) = self.apply((&first.tx, &first.ty));
        Isometry { swap, sx, sy, tx, ty }
    }

    fn matrix(&self) -> [[i8; 2]; 2] {
        if self.swap {
            [[0, self.sx], [self.sy, 0]]
        } else {
            [[self.sx, 0], [0, self.sy]]
        }
    }
}
