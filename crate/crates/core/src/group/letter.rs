use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::exact::{Circle, IntMatrix, Integer, Rational};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LetterKind {
    S,
    Sperp,
}

/// One generator `S_i` or `S_i^⊥`, with `index` in `1..=4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    kind: LetterKind,
    index: u8,
}

impl Letter {
    pub fn new(kind: LetterKind, index: u8) -> Result<Self, Error> {
        if !(1..=4).contains(&index) {
            return Err(Error::Parse(format!("generator index {index} out of range 1..=4")));
        }
        Ok(Letter { kind, index })
    }

    pub fn s(index: u8) -> Self {
        Self::new(LetterKind::S, index).expect("index in 1..=4")
    }

    pub fn t(index: u8) -> Self {
        Self::new(LetterKind::Sperp, index).expect("index in 1..=4")
    }

    pub fn kind(self) -> LetterKind {
        self.kind
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// Zero-based row the letter acts on.
    pub fn row(self) -> usize {
        self.index as usize - 1
    }

    pub fn is_dual(self) -> bool {
        self.kind == LetterKind::Sperp
    }

    pub fn all() -> impl Iterator<Item = Letter> {
        (1..=4).map(Letter::s).chain((1..=4).map(Letter::t))
    }

    pub fn apollonian() -> impl Iterator<Item = Letter> {
        (1..=4).map(Letter::s)
    }

    pub fn dual(self) -> Letter {
        let kind = match self.kind {
            LetterKind::S => LetterKind::Sperp,
            LetterKind::Sperp => LetterKind::S,
        };
        Letter { kind, index: self.index }
    }

    /// `S_i`: identity except row `i`, which is `−e_i + 2·Σ_{j≠i} e_j`;
    /// `S_i^⊥ = S_iᵀ`.
    pub fn matrix(self) -> IntMatrix {
        let i = self.row();
        let s = IntMatrix::from_fn(|r, c| {
            let v = if r == i {
                if c == i {
                    -1
                } else {
                    2
                }
            } else if r == c {
                1
            } else {
                0
            };
            Integer::from(v)
        });
        match self.kind {
            LetterKind::S => s,
            LetterKind::Sperp => s.transpose(),
        }
    }

    /// In a normal-form word, may `self` be applied right after `prev`?
    pub fn may_follow(self, prev: Letter) -> bool {
        match prev.kind {
            LetterKind::S => match self.kind {
                LetterKind::S => self.index != prev.index,
                LetterKind::Sperp => self.index == prev.index,
            },
            LetterKind::Sperp => self != prev,
        }
    }

    /// Left-multiplies the 4-row stack by this generator, in place.
    pub fn act<T: RowLike>(self, rows: &mut [T; 4]) {
        let i = self.row();
        match self.kind {
            LetterKind::S => {
                let mut sum = rows[(i + 1) % 4].clone();
                for k in 2..4 {
                    sum = sum.plus(&rows[(i + k) % 4]);
                }
                rows[i] = sum.plus(&sum).minus(&rows[i]);
            }
            LetterKind::Sperp => {
                let wi = rows[i].clone();
                let twice = wi.plus(&wi);
                for (k, r) in rows.iter_mut().enumerate() {
                    *r = if k == i { wi.negated() } else { r.plus(&twice) };
                }
            }
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            LetterKind::S => 's',
            LetterKind::Sperp => 't',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid generator `{s}` (expected s1..s4 or t1..t4)"));
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('s' | 'S') => LetterKind::S,
            Some('t' | 'T') => LetterKind::Sperp,
            _ => return Err(bad()),
        };
        let index: u8 = chars.as_str().parse().map_err(|_| bad())?;
        Letter::new(kind, index).map_err(|_| bad())
    }
}

/// Values a generator can act on row-wise.
pub trait RowLike: Clone {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl RowLike for Circle {
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl RowLike for Integer {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl RowLike for Rational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn negated(&self) -> Self {
        -self
    }
}
