use std::collections::BTreeSet;

use num_traits::ToPrimitive;

use super::bfs::{Enumeration, PackedCircle};
use crate::exact::rational::rat;
use crate::exact::{Circle, Isometry};
use crate::{Error, Result};

/// Number of enumerated circles whose closed interior strictly contains `c`.
///
/// Fails when fewer containers are present than the witness depth of `c`,
/// which means the enumeration was cut short.
pub fn nesting_depth_geometric(c: &Circle, set: &Enumeration) -> Result<usize> {
    let me = set.get(c).ok_or(Error::NotEnumerated)?;
    let found = set.iter().filter(|o| o.circle.contains(&me.circle)).count();
    if found < me.depth {
        return Err(Error::IncompleteEnumeration { found, expected: me.depth });
    }
    Ok(found)
}

/// A circle together with the enumerated part of the Apollonian packing it
/// bounds. `truncated` is set when fewer than three inner circles were
/// enumerated, so not even a generating configuration is present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundingPacking {
    pub members: Vec<PackedCircle>,
    pub truncated: bool,
}

pub fn bounding_packing(c: &PackedCircle, set: &Enumeration) -> BoundingPacking {
    let mut members = vec![c.clone()];
    members.extend(set.iter().filter(|o| o.depth == c.depth + 1 && c.circle.contains(&o.circle)).cloned());
    let truncated = members.len() < 4;
    BoundingPacking { members, truncated }
}

/// Rows as integers when every entry is an integer small enough.
fn integer_rows(cs: &[PackedCircle]) -> Option<Vec<[i128; 4]>> {
    cs.iter()
        .map(|p| {
            let c = &p.circle;
            let v = [&c.bbar, &c.b, &c.bx, &c.by];
            let mut out = [0i128; 4];
            for (o, x) in out.iter_mut().zip(v) {
                if !x.is_integer() {
                    return None;
                }
                let n = x.to_integer().to_i64()?;
                *o = n as i128;
            }
            Some(out)
        })
        .collect()
}

/// Twice the inversive product.
fn twice_inv(a: &[i128; 4], b: &[i128; 4]) -> i128 {
    2 * (a[2] * b[2] + a[3] * b[3]) - (a[0] * b[1] + a[1] * b[0])
}

/// First pair `(i, j)` whose interior relation fails `ok`, given twice the
/// inversive product for integral rows or the exact product otherwise.
fn first_pair(
    cs: &[PackedCircle],
    mut only: impl FnMut(usize, usize) -> bool,
    ok_twice: impl Fn(i128) -> bool,
    ok_exact: impl Fn(&Circle, &Circle) -> bool,
) -> Option<(usize, usize)> {
    let fast = integer_rows(cs);
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if !only(i, j) {
                continue;
            }
            let good = match &fast {
                Some(r) => ok_twice(twice_inv(&r[i], &r[j])),
                None => ok_exact(&cs[i].circle, &cs[j].circle),
            };
            if !good {
                return Some((i, j));
            }
        }
    }
    None
}

/// A crossing pair of circles, if any.
pub fn crossing_pair(cs: &[PackedCircle]) -> Option<(usize, usize)> {
    first_pair(cs, |_, _| true, |t| t.abs() >= 2, |a, b| crate::pair_relation(a, b) != crate::PairRelation::Crossing)
}

/// A pair at equal depth whose interiors overlap, if any.
pub fn same_depth_violation(cs: &[PackedCircle]) -> Option<(usize, usize)> {
    first_pair(cs, |i, j| cs[i].depth == cs[j].depth, |t| t <= -2, |a, b| a.inversive(b) <= rat(-1))
}

/// Compares `g` applied to the part of `a` meeting its window with the part of
/// `b` meeting its window, as sets of (geometric circle, depth). Returns a
/// circle in the symmetric difference if they differ.
pub fn periodicity_counterexample(a: &Enumeration, b: &Enumeration, g: &Isometry) -> Option<Circle> {
    let pick = |e: &Enumeration, map: bool| -> BTreeSet<(Circle, usize)> {
        let w = e.budget().window.clone();
        e.iter()
            .filter(|p| w.as_ref().is_none_or(|w| w.meets_circle(&p.circle)))
            .map(|p| {
                let c = if map { p.circle.transform(g) } else { p.circle.clone() };
                (c.geometric_key(), p.depth)
            })
            .collect()
    };
    let (lhs, rhs) = (pick(a, true), pick(b, false));
    lhs.symmetric_difference(&rhs).next().map(|(c, _)| c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{generate_superpacking, EnumerationBudget, Window};
    use crate::exact::rational::int;
    use crate::AugmentedMatrix;

    fn standard(n: i64) -> Enumeration {
        let b = EnumerationBudget::new(int(n)).unwrap().with_window(Window::unit_square());
        generate_superpacking(&AugmentedMatrix::d1(), &b).unwrap()
    }

    #[test]
    fn depths_agree() {
        let e = standard(40);
        for c in AugmentedMatrix::d1().rows() {
            let d = nesting_depth_geometric(c, &e);
            if Window::unit_square().meets_circle(c) {
                assert_eq!(d.unwrap(), 0);
            } else {
                assert_eq!(d, Err(Error::NotEnumerated));
            }
        }
        for p in e.iter() {
            assert_eq!(nesting_depth_geometric(&p.circle, &e).unwrap(), p.depth, "{} {}", p.circle, p.witness);
        }
        // First reflections into the unit circle at (1, 0) sit at depth 1.
        let t3 = e.iter().find(|p| p.witness.to_string() == "t3").unwrap();
        assert_eq!(nesting_depth_geometric(&t3.circle, &e).unwrap(), 1);
        assert_eq!(nesting_depth_geometric(&Circle::from_i64([0, 1, 5, 5]), &e), Err(Error::NotEnumerated));
    }

    #[test]
    fn invariants_hold() {
        let e = standard(60);
        assert_eq!(crossing_pair(e.circles()), None);
        assert_eq!(same_depth_violation(e.circles()), None);
    }

    #[test]
    fn bounding_packings_are_disjoint() {
        let e = standard(60);
        let outer: Vec<_> = e.iter().filter(|p| p.depth == 1 && p.circle.b > rat(0)).take(6).collect();
        let mut seen = BTreeSet::new();
        for o in &outer {
            let bp = bounding_packing(o, &e);
            for m in &bp.members[1..] {
                assert!(seen.insert(m.circle.clone()));
            }
        }
        let tiny = e.iter().max_by_key(|p| p.circle.b.clone()).unwrap();
        let bp = bounding_packing(tiny, &e);
        assert!(bp.truncated);
        assert_eq!(bp.members.len(), 1);
    }
}
