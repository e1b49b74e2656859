use super::word::GroupWord;
use crate::exact::forms::{q_d, q_l};
use crate::exact::{AugmentedMatrix, IntMatrix, RatMatrix};
use crate::{Error, Result};

/// Integer matrix in `Aut(Q_D, ℤ)`, optionally remembering a word for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    matrix: IntMatrix,
    word: Option<GroupWord>,
}

impl GroupElement {
    pub fn from_word(word: GroupWord) -> Self {
        GroupElement { matrix: word.matrix(), word: Some(word) }
    }

    pub fn from_matrix(matrix: IntMatrix) -> Result<Self> {
        if !is_aut_qd(&matrix.to_rat()) {
            return Err(Error::InvalidAugmented);
        }
        Ok(GroupElement { matrix, word: None })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn word(&self) -> Option<&GroupWord> {
        self.word.as_ref()
    }

    pub fn apply(&self, w: &AugmentedMatrix) -> AugmentedMatrix {
        match &self.word {
            Some(word) => word.apply(w),
            None => AugmentedMatrix::from_matrix(&self.matrix.to_rat().mul(&w.matrix()))
                .expect("Aut(Q_D) preserves the augmented identity"),
        }
    }
}

/// Integer entries and `Uᵀ Q_D U = Q_D`.
pub fn is_aut_qd(u: &RatMatrix) -> bool {
    u.is_integral() && u.congruence(&q_d()) == q_d()
}

/// Integer entries and `Uᵀ Q_L U = Q_L`.
pub fn is_lorentz_integer(u: &RatMatrix) -> bool {
    u.is_integral() && u.congruence(&q_l()) == q_l()
}

/// The duality operator `D` exchanging a configuration with its dual.
pub fn duality_matrix() -> RatMatrix {
    RatMatrix::from_fn(|i, j| crate::exact::rational::frac(if i == j { -1 } else { 1 }, 2))
}

/// Intertwiner between the Descartes and Lorentz forms; symmetric involution.
pub fn j0() -> RatMatrix {
    RatMatrix::from_scaled([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], 2)
}

pub fn conjugate_j0(u: &RatMatrix) -> RatMatrix {
    let j = j0();
    j.mul(u).mul(&j)
}

/// `P_σ` with `P_σ e_i = e_{σ(i)}`, so that `P_σ S_i P_σ⁻¹ = S_{σ(i)}`.
/// `sigma` is zero-based.
pub fn permutation_matrix(sigma: [usize; 4]) -> IntMatrix {
    IntMatrix::from_fn(|r, c| (sigma[c] == r).into())
}

/// Transposition `P_(ij)` for one-based `i, j`.
pub fn transposition(i: usize, j: usize) -> IntMatrix {
    let mut sigma = [0, 1, 2, 3];
    sigma.swap(i - 1, j - 1);
    permutation_matrix(sigma)
}

/// All 24 permutations of four indices in lexicographic order.
pub fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
