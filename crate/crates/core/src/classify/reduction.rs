use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::exact::rational::{int, isqrt_exact};
use crate::exact::{DescartesQuadruple, Integer, Orientation};
use crate::group::{GroupWord, Letter};
use crate::{Error, Result};

/// Output of the two-phase reduction to a permutation of `±(0,0,g,g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub word: GroupWord,
    pub ground: DescartesQuadruple,
    /// `size = Σ b` of the (positively oriented) quadruple before the first
    /// step and after each step.
    pub sizes: Vec<Integer>,
}

fn size(b: &[Integer; 4]) -> Integer {
    b.iter().sum()
}

fn argmax(b: &[Integer; 4]) -> usize {
    (1..4).fold(0, |best, k| if b[k] > b[best] { k } else { best })
}

fn argmin(b: &[Integer; 4]) -> usize {
    (1..4).fold(0, |best, k| if b[k] < b[best] { k } else { best })
}

/// One basic step: `S_i` at the largest curvature, if it shrinks the size.
fn basic_step(b: &[Integer; 4]) -> Option<(Letter, [Integer; 4])> {
    let i = argmax(b);
    let mut next = b.clone();
    Letter::s(i as u8 + 1).act(&mut next);
    (next[i] < b[i]).then(|| (Letter::s(i as u8 + 1), next))
}

/// Greedy descent: apply `S_i` at the largest curvature while the size
/// drops; when stuck with a negative smallest curvature `b_j`, apply
/// `S_j^⊥`. Ties pick the lowest index. A negatively oriented input is
/// negated, reduced, and the ground negated back.
pub fn reduce_to_ground(q: &DescartesQuadruple) -> Result<Reduction> {
    DescartesQuadruple::new(q.0.clone())?;
    let neg = q.orientation() == Orientation::Negative;
    let mut b = if neg { q.neg().0 } else { q.0.clone() };
    let mut letters = Vec::new();
    let mut sizes = vec![size(&b)];
    loop {
        if let Some((l, next)) = basic_step(&b) {
            letters.push(l);
            b = next;
        } else {
            let j = argmin(&b);
            if !b[j].is_negative() {
                break;
            }
            let l = Letter::t(j as u8 + 1);
            l.act(&mut b);
            letters.push(l);
        }
        sizes.push(size(&b));
    }
    debug_assert_eq!(b.iter().filter(|x| x.is_zero()).count(), 2);
    let ground = DescartesQuadruple(if neg { b.map(|x| -x) } else { b });
    Ok(Reduction { word: GroupWord::from_applied_order(letters), ground, sizes })
}

/// Sorted quadruple `a ≤ b ≤ c ≤ d` with `a + b + c ≥ d` and `a < 0`, or a
/// member of the `(0,0,g,g)` family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootQuadruple(DescartesQuadruple);

impl RootQuadruple {
    pub fn new(q: DescartesQuadruple) -> Result<Self> {
        let s = q.sorted();
        let [a, b, c, d] = &s.0;
        if q != s {
            return Err(Error::NotRoot("curvatures must be sorted ascending"));
        }
        if a + b + c < *d {
            return Err(Error::NotRoot("a + b + c < d"));
        }
        if !a.is_negative() && !(a.is_zero() && b.is_zero()) {
            return Err(Error::NotRoot("smallest curvature must be negative"));
        }
        Ok(RootQuadruple(s))
    }

    pub fn from_i64(b: [i64; 4]) -> Result<Self> {
        Self::new(DescartesQuadruple::from_i64(b)?)
    }

    pub fn quadruple(&self) -> &DescartesQuadruple {
        &self.0
    }

    pub fn is_ground_family(&self) -> bool {
        self.0 .0[0].is_zero()
    }
}

impl fmt::Display for RootQuadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Apollonian-only descent: the word of basic steps and the unsorted
/// quadruple where it stops.
pub fn root_reduction(q: &DescartesQuadruple) -> Result<(GroupWord, DescartesQuadruple)> {
    DescartesQuadruple::new(q.0.clone())?;
    if q.orientation() == Orientation::Negative {
        return Err(Error::NegativelyOriented);
    }
    let mut b = q.0.clone();
    let mut letters = Vec::new();
    while let Some((l, next)) = basic_step(&b) {
        letters.push(l);
        b = next;
    }
    Ok((GroupWord::from_applied_order(letters), DescartesQuadruple(b)))
}

pub fn root_quadruple(q: &DescartesQuadruple) -> Result<RootQuadruple> {
    let (_, b) = root_reduction(q)?;
    RootQuadruple::new(b.sorted())
}

/// All root quadruples `(−n, b, c, d)`, primitive only when asked.
///
/// Bounds: `d ≥ c` with `d = −n + b + c − 2√(bc − n(b+c))` forces
/// `4c(b − n) ≤ (b + n)²`, and `c ≥ b` then forces `3b² − 6nb − n² ≤ 0`.
pub fn root_quadruples_with_curvature(n: u64, primitive: bool) -> Vec<RootQuadruple> {
    let a = -int(n as i64);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut b = int(n as i64 + 1);
    loop {
        let three_b2 = int(3) * &b * &b;
        if three_b2 + int(6) * &a * &b - &a * &a > int(0) {
            break;
        }
        let mut c = b.clone();
        loop {
            if int(4) * &c * (&a + &b) > (&b - &a) * (&b - &a) {
                break;
            }
            let disc = &a * &b + &b * &c + &c * &a;
            if let Some(r) = isqrt_exact(&disc) {
                let d: Integer = &a + &b + &c - int(2) * r;
                if d >= c {
                    let g = a.gcd(&b).gcd(&c).gcd(&d);
                    if !primitive || g == int(1) {
                        let q = DescartesQuadruple([a.clone(), b.clone(), c.clone(), d]);
                        out.push(RootQuadruple::new(q).expect("search bounds give root quadruples"));
                    }
                }
            }
            c += 1;
        }
        b += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(b: [i64; 4]) -> DescartesQuadruple {
        DescartesQuadruple::from_i64(b).unwrap()
    }

    #[test]
    fn ground_is_fixed() {
        let r = reduce_to_ground(&q([0, 0, 2, 2])).unwrap();
        assert!(r.word.is_empty());
        assert_eq!(r.ground, q([0, 0, 2, 2]));
    }

    #[test]
    fn hand_traces() {
        let r = reduce_to_ground(&q([-1, 2, 2, 3])).unwrap();
        assert_eq!(r.word.to_string(), "t1");
        assert_eq!(r.ground, q([1, 0, 0, 1]));
        let r = reduce_to_ground(&q([-6, 11, 14, 15])).unwrap();
        assert_eq!(r.word.to_string(), "t2 s1 t1");
        assert_eq!(r.ground, q([0, 1, 0, 1]));
        assert_eq!(r.sizes, [34, 10, 6, 2].map(int));
        let r = reduce_to_ground(&q([0, 0, -1, -1])).unwrap();
        assert_eq!(r.ground, q([0, 0, -1, -1]));
    }

    #[test]
    fn roots() {
        assert_eq!(root_quadruple(&q([15, 2, 2, 3])).unwrap(), RootQuadruple::from_i64([-1, 2, 2, 3]).unwrap());
        assert_eq!(root_quadruple(&q([-6, 7, 42, 43])).unwrap().quadruple(), &q([-6, 7, 42, 43]));
        assert_eq!(root_quadruple(&q([0, 0, 1, 1])).unwrap().quadruple(), &q([0, 0, 1, 1]));
        assert_eq!(root_quadruple(&q([0, 0, -1, -1])), Err(Error::NegativelyOriented));
        assert!(RootQuadruple::from_i64([2, 2, 3, 15]).is_err());
    }

    #[test]
    fn curvature_six() {
        let got: Vec<_> =
            root_quadruples_with_curvature(6, true).into_iter().map(|r| r.quadruple().0.clone()).collect();
        assert_eq!(got, vec![[-6, 7, 42, 43].map(int), [-6, 10, 15, 19].map(int), [-6, 11, 14, 15].map(int)]);
    }

    #[test]
    fn search_matches_brute_force() {
        // Independent box search over d as well, no derived bounds.
        for n in 1..=12i64 {
            let mut brute = Vec::new();
            for b in 1..=200i64 {
                for c in b..=200 {
                    for d in c..=400 {
                        let s = -n + b + c + d;
                        let sq = n * n + b * b + c * c + d * d;
                        if s * s == 2 * sq && -n + b + c >= d {
                            brute.push([-n, b, c, d].map(int));
                        }
                    }
                }
            }
            let got: Vec<_> =
                root_quadruples_with_curvature(n as u64, false).into_iter().map(|r| r.quadruple().0.clone()).collect();
            assert_eq!(got, brute, "n = {n}");
        }
    }
}
