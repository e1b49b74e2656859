use std::fmt;
use std::str::FromStr;

use super::letter::{Letter, LetterKind, RowLike};
use crate::exact::{AugmentedMatrix, DescartesQuadruple, IntMatrix};
use crate::Error;

/// Product `U_m ⋯ U_1` of generators, stored latest-first: `letters[0]` is
/// `U_m`, the last element is `U_1` (applied first).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn from_latest_first(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn from_applied_order(mut letters: Vec<Letter>) -> Self {
        letters.reverse();
        GroupWord { letters }
    }

    pub fn latest_first(&self) -> &[Letter] {
        &self.letters
    }

    /// Letters in the order they act: `U_1, U_2, …`.
    pub fn applied_order(&self) -> impl DoubleEndedIterator<Item = Letter> + '_ {
        self.letters.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The most recently applied letter `U_m`.
    pub fn last_applied(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// `letter · self`.
    pub fn then(&self, letter: Letter) -> GroupWord {
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        GroupWord { letters }
    }

    /// Number of ⊥-letters.
    pub fn dual_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_dual()).count()
    }

    /// Inverse element: generators are involutions, so reverse the word.
    pub fn inverse(&self) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        GroupWord { letters }
    }

    /// `self · first` (apply `first`, then `self`).
    pub fn compose(&self, first: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&first.letters);
        GroupWord { letters }
    }

    pub fn matrix(&self) -> IntMatrix {
        self.applied_order().fold(IntMatrix::identity(), |acc, l| l.matrix().mul(&acc))
    }

    pub fn act<T: RowLike>(&self, rows: &mut [T; 4]) {
        for l in self.applied_order() {
            l.act(rows);
        }
    }

    pub fn apply(&self, w: &AugmentedMatrix) -> AugmentedMatrix {
        let mut rows = w.rows().clone();
        self.act(&mut rows);
        AugmentedMatrix::from_rows_unchecked(rows)
    }

    pub fn apply_quadruple(&self, q: &DescartesQuadruple) -> DescartesQuadruple {
        let mut b = q.0.clone();
        self.act(&mut b);
        DescartesQuadruple(b)
    }

    /// Both conditions of the normal form: after `S_i` comes `S_j` (`j ≠ i`)
    /// or `S_i^⊥`; after `S_i^⊥` anything but `S_i^⊥`.
    pub fn is_normal_form(&self) -> bool {
        let applied: Vec<Letter> = self.applied_order().collect();
        applied.windows(2).all(|p| p[1].may_follow(p[0]))
    }

    /// Cancels adjacent equal letters and moves each `S_j^⊥` toward the
    /// first-applied end past commuting `S_i` (`i ≠ j`), to a fixpoint.
    pub fn normalize(&self) -> GroupWord {
        let mut a: Vec<Letter> = self.applied_order().collect();
        loop {
            let mut changed = false;
            let mut k = 0;
            while k + 1 < a.len() {
                let (u, v) = (a[k], a[k + 1]);
                if u == v {
                    a.drain(k..k + 2);
                    changed = true;
                    k = k.saturating_sub(1);
                    continue;
                }
                if u.kind() == LetterKind::S && v.kind() == LetterKind::Sperp && u.index() != v.index() {
                    a.swap(k, k + 1);
                    changed = true;
                }
                k += 1;
            }
            if !changed {
                return GroupWord::from_applied_order(a);
            }
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    /// Whitespace-separated letters, first-applied last, e.g. `"t1 s2"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let letters = s.split_whitespace().map(str::parse).collect::<Result<Vec<Letter>, _>>()?;
        Ok(GroupWord { letters })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(w("s1 s1").normalize(), GroupWord::empty());
        assert_eq!(w("t1 s2").normalize(), w("s2 t1"));
        assert_eq!(w("t1 s1").normalize(), w("t1 s1"));
        assert!(w("t1 s1").is_normal_form());
        assert!(!w("t1 s2").is_normal_form());
        assert_eq!(w("s1 t2 t2 s1").normalize(), GroupWord::empty());
    }

    #[test]
    fn application_examples() {
        let q = DescartesQuadruple::from_i64([-1, 2, 2, 3]).unwrap();
        assert_eq!(w("s4").apply_quadruple(&q), q);
        assert_eq!(w("s1").apply_quadruple(&q).0, [15, 2, 2, 3].map(Into::into));
        let d1 = AugmentedMatrix::d1();
        assert_eq!(GroupWord::empty().apply(&d1), d1);
    }

    #[test]
    fn text_round_trip() {
        let x = w("t1  s2 s3\ts4");
        assert_eq!(x.to_string(), "t1 s2 s3 s4");
        assert_eq!(x.last_applied(), Some(Letter::t(1)));
        assert_eq!(x.applied_order().next(), Some(Letter::s(4)));
        assert!("s1 x2".parse::<GroupWord>().is_err());
    }

    fn arb_word(max: usize) -> impl Strategy<Value = GroupWord> {
        prop::collection::vec((any::<bool>(), 1u8..=4), 0..max).prop_map(|v| {
            GroupWord::from_latest_first(
                v.into_iter().map(|(d, i)| if d { Letter::t(i) } else { Letter::s(i) }).collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn normalize_preserves_element(x in arb_word(16)) {
            let n = x.normalize();
            prop_assert!(n.is_normal_form());
            prop_assert!(n.len() <= x.len());
            prop_assert_eq!(n.matrix(), x.matrix());
            prop_assert_eq!(n.normalize(), n.clone());
        }

        #[test]
        fn action_matches_matrix(x in arb_word(12)) {
            let d1 = AugmentedMatrix::d1();
            let img = x.apply(&d1);
            prop_assert_eq!(img.matrix(), x.matrix().to_rat().mul(&d1.matrix()));
            prop_assert!(img.is_valid());
            prop_assert_eq!(x.inverse().apply(&img), d1);
        }
    }
}
