//! Generators of the super-Apollonian group, words in them, and the
//! Lorentz-side machinery used to check group identities.

mod element;
mod letter;
mod lorentz;
mod word;

pub use element::{
    conjugate_j0, duality_matrix, is_aut_qd, is_lorentz_integer, j0, permutation_matrix, permutations4, transposition,
    GroupElement,
};
pub use letter::{Letter, LetterKind, RowLike};
pub use lorentz::{from_lorentz_point, lorentz_point, stabilizer_matrix, StabilizerMatrix, StabilizerType};
pub use word::GroupWord;

use crate::exact::IntMatrix;

/// The generator matrix of a letter.
pub fn generator_matrix(letter: Letter) -> IntMatrix {
    letter.matrix()
}

/// `J₀ S_j J₀` for `j = 1..4`, as literal integer matrices.
pub fn conjugated_generator(j: u8) -> IntMatrix {
    IntMatrix::from_i64(match j {
        1 => [[2, -1, -1, -1], [1, 0, -1, -1], [1, -1, 0, -1], [1, -1, -1, 0]],
        2 => [[2, -1, 1, 1], [1, 0, 1, 1], [-1, 1, 0, -1], [-1, 1, -1, 0]],
        3 => [[2, 1, -1, 1], [-1, 0, 1, -1], [1, 1, 0, 1], [-1, -1, 1, 0]],
        4 => [[2, 1, 1, -1], [-1, 0, -1, 1], [-1, -1, 0, 1], [1, 1, 1, 0]],
        _ => panic!("generator index {j} out of range 1..=4"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugated_generators_match_print() {
        for j in 1..=4 {
            let s = Letter::s(j).matrix().to_rat();
            let t = Letter::t(j).matrix().to_rat();
            assert_eq!(conjugate_j0(&s), conjugated_generator(j).to_rat(), "S{j}");
            assert_eq!(conjugate_j0(&t), conjugated_generator(j).to_rat().transpose(), "S{j}perp");
            assert!(is_lorentz_integer(&conjugate_j0(&t)));
        }
    }

    #[test]
    fn relations() {
        let d = duality_matrix();
        for i in 1..=4 {
            let s = Letter::s(i).matrix();
            assert_eq!(d.mul(&s.to_rat()).mul(&d), s.transpose().to_rat());
            for j in 1..=4 {
                if i != j {
                    let (ti, sj) = (Letter::t(i).matrix(), Letter::s(j).matrix());
                    assert_eq!(ti.mul(&sj), sj.mul(&ti));
                }
            }
        }
    }
}
