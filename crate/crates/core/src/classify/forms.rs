use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::reduction::reduce_to_ground;
use crate::exact::rational::{as_integer, from_int, int};
use crate::exact::{AugmentedMatrix, ConfigMatrix, Integer, Orientation, Rational};
use crate::group::{permutations4, GroupWord, Letter};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

/// Rows of `A_{m,n}[g]` or `B_{m,n}[g]` for arbitrary integers `m, n`.
pub fn canonical_config(family: Family, m: &Integer, n: &Integer, g: &Integer) -> ConfigMatrix {
    let r = |a: &Integer, b: &Integer, c: &Integer| [from_int(a), from_int(b), from_int(c)];
    let (z, one, two) = (int(0), int(1), int(2));
    ConfigMatrix(match family {
        Family::A => [r(&z, &z, &one), r(&z, &z, &-one.clone()), r(g, m, n), r(g, &(m - &two), n)],
        Family::B => [r(&z, &one, &z), r(&z, &-one.clone(), &z), r(g, m, n), r(g, m, &(n - &two))],
    })
}

/// `Ã_{m,n}[g]`, `B̃_{m,n}[g]` with the cocurvature column written out.
pub fn canonical_augmented(family: Family, m: &Integer, n: &Integer, g: &Integer) -> AugmentedMatrix {
    let q = |x: Integer| Rational::new(x, g.clone());
    let (m2, n2) = (m * m, n * n);
    let two = int(2);
    let bbar = match family {
        Family::A => {
            [q(&two * (n + 1)), q(&two * (int(1) - n)), q(&m2 + &n2 - 1), q((m - &two) * (m - &two) + &n2 - 1)]
        }
        Family::B => {
            [q(&two * (m + 1)), q(&two * (int(1) - m)), q(&m2 + &n2 - 1), q(&m2 + (n - &two) * (n - &two) - 1)]
        }
    };
    let m4 = canonical_config(family, m, n, g);
    let rows = std::array::from_fn(|k| {
        let [b, x, y] = m4.0[k].clone();
        crate::exact::Circle::new(bbar[k].clone(), b, x, y)
    });
    AugmentedMatrix::new(rows).expect("canonical forms are Descartes configurations")
}

/// Orbit label: family, `m, n ∈ {0,1}`, divisor, row permutation and sign.
/// `row_permutation[k]` is the canonical row placed at actual row `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedForm {
    pub family: Family,
    pub m: u8,
    pub n: u8,
    #[serde(with = "crate::exact::rational::serde_integer")]
    pub g: Integer,
    pub row_permutation: [usize; 4],
    pub orientation: Orientation,
}

pub type OrbitLabel = ReducedForm;

impl ReducedForm {
    pub fn base(family: Family, m: u8, n: u8, g: Integer) -> Self {
        ReducedForm { family, m, n, g, row_permutation: [0, 1, 2, 3], orientation: Orientation::Positive }
    }

    pub fn instantiate(&self) -> ConfigMatrix {
        self.instantiate_augmented().config()
    }

    pub fn instantiate_augmented(&self) -> AugmentedMatrix {
        let w = canonical_augmented(self.family, &int(self.m.into()), &int(self.n.into()), &self.g)
            .permute_rows(&self.row_permutation);
        match self.orientation {
            Orientation::Positive => w,
            Orientation::Negative => w.neg(),
        }
    }

    /// Short name such as `A_{1,0}[1]`.
    pub fn name(&self) -> String {
        format!("{}_{{{},{}}}[{}]", self.family, self.m, self.n, self.g)
    }
}

impl fmt::Display for ReducedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.row_permutation.map(|k| k + 1);
        write!(f, "{} perm=({},{},{},{}) orientation={}", self.name(), p[0], p[1], p[2], p[3], self.orientation)
    }
}

/// Locates the canonical rows of a positively oriented ground
/// configuration: two lines with opposite axis normals and two circles of
/// curvature `g`. Returns the family, canonical `(m, n)`, `g` and the
/// actual row of each canonical row.
fn read_ground(w: &AugmentedMatrix) -> Result<(Family, Integer, Integer, Integer, [usize; 4])> {
    let rows = w.config().0;
    let mut lines = Vec::new();
    let mut circles = Vec::new();
    for (k, r) in rows.iter().enumerate() {
        if r[0].is_zero() {
            lines.push(k);
        } else {
            circles.push(k);
        }
    }
    if lines.len() != 2 || circles.len() != 2 {
        return Err(Error::NotGroundForm);
    }
    let geti = |x: &Rational| as_integer(x).ok_or(Error::NotIntegral);
    let one = Rational::one();
    let (family, plus) = if rows[lines[0]][2].abs() == one {
        (Family::A, if rows[lines[0]][2] == one { lines[0] } else { lines[1] })
    } else if rows[lines[0]][1].abs() == one {
        (Family::B, if rows[lines[0]][1] == one { lines[0] } else { lines[1] })
    } else {
        return Err(Error::NotGroundForm);
    };
    let minus = if plus == lines[0] { lines[1] } else { lines[0] };
    let (c0, c1) = (circles[0], circles[1]);
    let axis = match family {
        Family::A => 1,
        Family::B => 2,
    };
    // The first canonical circle has the larger coordinate along the axis of
    // the strip.
    let (first, second) = if rows[c0][axis] > rows[c1][axis] { (c0, c1) } else { (c1, c0) };
    let g = geti(&rows[first][0])?;
    let (m, n) = (geti(&rows[first][1])?, geti(&rows[first][2])?);
    Ok((family, m, n, g, [plus, minus, first, second]))
}

/// Reduces an integral configuration to its label together with a word
/// `w` such that `w · M` instantiates the label.
pub fn reduced_form(m: &ConfigMatrix) -> Result<(GroupWord, ReducedForm)> {
    if !m.is_integral() {
        return Err(Error::NotIntegral);
    }
    let w0 = m.to_augmented()?;
    let orientation = w0.orientation();
    let pos = match orientation {
        Orientation::Positive => w0,
        Orientation::Negative => w0.neg(),
    };
    let red = reduce_to_ground(&pos.quadruple()?)?;
    let mut word = red.word;
    let mut cur = word.apply(&pos);
    loop {
        let (family, mm, nn, g, at) = read_ground(&cur)?;
        // Shift along the strip (S at a circle row) or across it (⊥ at a line).
        let step = if mm >= int(2) {
            Some(match family {
                Family::A => Letter::s(at[2] as u8 + 1),
                Family::B => Letter::t(at[1] as u8 + 1),
            })
        } else if mm.is_negative() {
            Some(match family {
                Family::A => Letter::s(at[3] as u8 + 1),
                Family::B => Letter::t(at[0] as u8 + 1),
            })
        } else if nn >= int(2) {
            Some(match family {
                Family::A => Letter::t(at[1] as u8 + 1),
                Family::B => Letter::s(at[2] as u8 + 1),
            })
        } else if nn.is_negative() {
            Some(match family {
                Family::A => Letter::t(at[0] as u8 + 1),
                Family::B => Letter::s(at[3] as u8 + 1),
            })
        } else {
            None
        };
        match step {
            Some(l) => {
                word = word.then(l);
                cur = GroupWord::from_latest_first(vec![l]).apply(&cur);
            }
            None => {
                let mut perm = [0; 4];
                for (canon, &actual) in at.iter().enumerate() {
                    perm[actual] = canon;
                }
                let to_u8 = |x: &Integer| if x.is_zero() { 0 } else { 1 };
                let label = ReducedForm { family, m: to_u8(&mm), n: to_u8(&nn), g, row_permutation: perm, orientation };
                debug_assert_eq!(label.instantiate_augmented(), word.apply(&m.to_augmented()?));
                return Ok((word, label));
            }
        }
    }
}

/// Even-entry count of each column `(b, bx, by)` of `M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Kappa(pub [u8; 3]);

pub fn kappa(m: &ConfigMatrix) -> Result<Kappa> {
    if !m.is_integral() {
        return Err(Error::NotIntegral);
    }
    let mut k = [0u8; 3];
    for r in &m.0 {
        for (j, x) in r.iter().enumerate() {
            if x.to_integer().is_even() {
                k[j] += 1;
            }
        }
    }
    Ok(Kappa(k))
}

/// The eight base forms for divisor `g`, `A` before `B`, then `(m, n)`.
pub fn base_forms(g: &Integer) -> Vec<ReducedForm> {
    let mut out = Vec::with_capacity(8);
    for family in [Family::A, Family::B] {
        for m in 0..2 {
            for n in 0..2 {
                out.push(ReducedForm::base(family, m, n, g.clone()));
            }
        }
    }
    out
}

/// All 384 decorated forms for divisor `g`: 8 forms × 24 row orders × 2 signs.
pub fn decorated_forms(g: &Integer) -> Vec<ReducedForm> {
    let mut out = Vec::with_capacity(384);
    for base in base_forms(g) {
        out.extend(decorations(&base));
    }
    out
}

/// The 48 permutation/sign variants of one form.
pub fn decorations(base: &ReducedForm) -> Vec<ReducedForm> {
    let mut out = Vec::with_capacity(48);
    for orientation in [Orientation::Positive, Orientation::Negative] {
        for perm in permutations4() {
            out.push(ReducedForm { row_permutation: perm, orientation, ..base.clone() });
        }
    }
    out
}
