//! The three quadratic forms preserved by the group actions.

use super::matrix::RatMatrix;
use super::rational::{frac, rat, Rational};

/// Symmetric form `x ↦ xᵀ·Q·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm(pub RatMatrix);

impl QuadraticForm {
    pub fn descartes() -> Self {
        QuadraticForm(q_d())
    }

    pub fn lorentz() -> Self {
        QuadraticForm(q_l())
    }

    pub fn augmented() -> Self {
        QuadraticForm(q_w())
    }

    pub fn eval(&self, v: &[Rational; 4]) -> Rational {
        let qv = self.0.mul_vec(v);
        v.iter().zip(&qv).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.transpose() == self.0
    }

    /// `Uᵀ Q U = Q`
    pub fn preserved_by(&self, u: &RatMatrix) -> bool {
        u.congruence(&self.0) == self.0
    }
}

/// `Q_D = I − ½·𝟙𝟙ᵀ`
pub fn q_d() -> RatMatrix {
    RatMatrix::from_fn(|i, j| if i == j { frac(1, 2) } else { frac(-1, 2) })
}

/// `Q_L = diag(−1, 1, 1, 1)`
pub fn q_l() -> RatMatrix {
    RatMatrix::diagonal([rat(-1), rat(1), rat(1), rat(1)])
}

/// Right-hand side of `Wᵀ Q_D W` on coordinates `(bbar, b, bx, by)`.
pub fn q_w() -> RatMatrix {
    RatMatrix::from_i64([[0, -4, 0, 0], [-4, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]])
}
