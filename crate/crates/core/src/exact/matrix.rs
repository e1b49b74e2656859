use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{as_integer, Integer, Rational};

/// Dense 4×4 matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat4<T>(pub [[T; 4]; 4]);

pub type IntMatrix = Mat4<Integer>;
pub type RatMatrix = Mat4<Rational>;

pub trait Ring:
    Clone + Zero + One + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

impl<T: Ring> Mat4<T> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Mat4(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(d: [T; 4]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { T::zero() })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| (0..4).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * rhs.0[k][j].clone()))
    }

    pub fn mul_vec(&self, v: &[T; 4]) -> [T; 4] {
        std::array::from_fn(|i| (0..4).fold(T::zero(), |acc, k| acc + self.0[i][k].clone() * v[k].clone()))
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Mat4<U> {
        Mat4(std::array::from_fn(|i| std::array::from_fn(|j| f(&self.0[i][j]))))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `selfᵀ · q · self`
    pub fn congruence(&self, q: &Self) -> Self {
        self.transpose().mul(q).mul(self)
    }

    /// Integer power by repeated squaring; `k ≥ 0`.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

impl Mat4<i64> {
    pub fn to_int(&self) -> IntMatrix {
        self.map(|&x| Integer::from(x))
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|&x| Rational::from_integer(Integer::from(x)))
    }
}

impl IntMatrix {
    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        Mat4(rows).to_int()
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }
}

impl RatMatrix {
    pub fn from_i64(rows: [[i64; 4]; 4]) -> Self {
        Mat4(rows).to_rat()
    }

    /// `rows / den`
    pub fn from_scaled(rows: [[i64; 4]; 4], den: i64) -> Self {
        Mat4(rows).map(|&x| Rational::new(Integer::from(x), Integer::from(den)))
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        let mut out = IntMatrix::identity();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = as_integer(&self.0[i][j])?;
            }
        }
        Some(out)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_integer())
    }
}

impl<T: fmt::Display> fmt::Display for Mat4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let a = IntMatrix::from_i64([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]);
        assert_eq!(a.pow(3), IntMatrix::from_i64([[1, 6, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]));
        assert_eq!(a.transpose().0[1][0], Integer::from(2));
        assert!(a.pow(0).is_identity());
        assert_eq!(a.mul_vec(&[1, 1, 1, 1].map(Integer::from)), [3, 1, 1, 1].map(Integer::from));
    }

    #[test]
    fn rational_to_integer() {
        let h = RatMatrix::from_scaled([[1, 1, 1, 1]; 4], 2);
        assert!(!h.is_integral());
        assert!(h.scale(&Rational::from_integer(2.into())).to_int().is_some());
    }
}
