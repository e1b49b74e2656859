use num_traits::{One, Signed, Zero};

use crate::classify::{reduce_to_ground, RootQuadruple};
use crate::exact::rational::{int, rat};
use crate::exact::{AugmentedMatrix, Isometry, Rational};
use crate::{Error, Result};

/// Configuration of the standard super-packing with curvatures `r` whose
/// bounding circle is centered in the closed unit square.
///
/// The reduction word of `r` is run backwards from the matching row
/// permutation of the standard configuration, then the bounding center is
/// moved into `[−1, 1)²` by the even lattice and reflected into `[0, 1]²`.
pub fn locate_in_unit_square(r: &RootQuadruple) -> Result<AugmentedMatrix> {
    if r.is_ground_family() {
        return Err(Error::GroundFamily);
    }
    let q = r.quadruple();
    if q.divisor() != int(1) {
        return Err(Error::NotRoot("quadruple is not primitive"));
    }
    let red = reduce_to_ground(q)?;
    let d1 = AugmentedMatrix::d1().into_rows();
    let (mut lines, mut disks) = (d1[..2].iter(), d1[2..].iter());
    let rows = red.ground.0.clone().map(|b| if b.is_zero() { lines.next() } else { disks.next() }.unwrap().clone());
    let ground = AugmentedMatrix::new(rows)?;
    let w = red.word.inverse().apply(&ground);
    let (cx, cy) = w.row(0).center().ok_or(Error::NotRoot("bounding circle is a line"))?;
    let shift = |v: &Rational| -> Rational {
        // 2k with v + 2k in [−1, 1).
        let k = ((v + rat(1)) / rat(2)).floor();
        -(k * rat(2))
    };
    let (tx, ty) = (shift(&cx), shift(&cy));
    let (x, y) = (&cx + &tx, &cy + &ty);
    let t = Isometry::translation(tx, ty);
    let flip = Isometry::linear(false, if x.is_negative() { -1 } else { 1 }, if y.is_negative() { -1 } else { 1 });
    Ok(w.transform(&flip.compose(&t)))
}

/// Compositions of the axis reflections with even translations of at most
/// `reach` steps per axis, identity excluded.
pub fn square_symmetries(reach: i64) -> Vec<Isometry> {
    let mut out = Vec::new();
    for sx in [1i8, -1] {
        for sy in [1i8, -1] {
            for i in -reach..=reach {
                for j in -reach..=reach {
                    let g = Isometry::translation(rat(2 * i), rat(2 * j)).compose(&Isometry::linear(false, sx, sy));
                    if g != Isometry::identity() {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

/// Whether `(x, y)` in `[0, 1]²` is the only point of its orbit under the
/// translations `(x ± 2, y)`, `(x, y ± 2)` and the reflections `x ↦ −x`,
/// `y ↦ −y` that lies in the square, and: an interior point is moved
/// strictly outside by every other such symmetry.
pub fn location_is_unique((x, y): (&Rational, &Rational)) -> bool {
    let zero = Rational::zero();
    let one = Rational::one();
    let inside = |p: &Rational| &zero <= p && p <= &one;
    if !(inside(x) && inside(y)) {
        return false;
    }
    square_symmetries(2).into_iter().all(|g| {
        let (u, v) = g.apply((x, y));
        !(inside(&u) && inside(&v)) || (&u == x && &v == y)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    fn located(b: [i64; 4]) -> AugmentedMatrix {
        locate_in_unit_square(&RootQuadruple::from_i64(b).unwrap()).unwrap()
    }

    #[test]
    fn curvature_six_and_one() {
        for b in [[-1, 2, 2, 3], [-6, 7, 42, 43], [-6, 10, 15, 19], [-6, 11, 14, 15]] {
            let w = located(b);
            assert!(w.is_valid() && w.is_strongly_integral());
            assert_eq!(w.curvatures(), b.map(rat));
            let (x, y) = w.row(0).center().unwrap();
            assert!(location_is_unique((&x, &y)), "{b:?} at ({x}, {y})");
        }
        let w = located([-1, 2, 2, 3]);
        assert_eq!(w.row(0).center().unwrap(), (rat(1), rat(0)));
    }

    #[test]
    fn rejects() {
        let g = RootQuadruple::from_i64([0, 0, 1, 1]).unwrap();
        assert_eq!(locate_in_unit_square(&g), Err(Error::GroundFamily));
        let r = RootQuadruple::from_i64([-2, 4, 4, 6]).unwrap();
        assert!(matches!(locate_in_unit_square(&r), Err(Error::NotRoot(_))));
    }

    #[test]
    fn uniqueness_rule() {
        assert!(location_is_unique((&frac(1, 3), &frac(1, 4))));
        assert!(location_is_unique((&rat(1), &rat(0))));
        assert!(!location_is_unique((&rat(2), &rat(0))));
    }
}
