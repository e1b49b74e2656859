use std::fmt;

use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::element::j0;
use crate::exact::rational::{as_integer, from_int, int};
use crate::exact::{DescartesQuadruple, IntMatrix, Integer};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilizerType {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for StabilizerType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StabilizerType::I => "I",
            StabilizerType::II => "II",
            StabilizerType::III => "III",
            StabilizerType::IV => "IV",
        })
    }
}

/// Integer Lorentz matrix `U(m, n; type)` fixing `(1,1,0,0)ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerMatrix {
    pub m: Integer,
    pub n: Integer,
    pub kind: StabilizerType,
    pub matrix: IntMatrix,
}

pub fn stabilizer_matrix(m: Integer, n: Integer, kind: StabilizerType) -> Result<StabilizerMatrix> {
    if m.is_odd() != n.is_odd() {
        return Err(Error::ParityViolation { m, n });
    }
    let t: Integer = (&m * &m + &n * &n) / 2;
    let one = int(1);
    let (fm, fn_) = match kind {
        StabilizerType::I => (false, false),
        StabilizerType::II => (false, true),
        StabilizerType::III => (true, false),
        StabilizerType::IV => (true, true),
    };
    let sgn = |flip: bool, x: &Integer| if flip { -x.clone() } else { x.clone() };
    let d3 = if fm { -one.clone() } else { one.clone() };
    let d4 = if fn_ { -one.clone() } else { one.clone() };
    let z = Integer::zero();
    let matrix = crate::exact::Mat4([
        [&one + &t, -t.clone(), sgn(fm, &m), sgn(fn_, &n)],
        [t.clone(), &one - &t, sgn(fm, &m), sgn(fn_, &n)],
        [m.clone(), -m.clone(), d3, z.clone()],
        [n.clone(), -n.clone(), z, d4],
    ]);
    Ok(StabilizerMatrix { m, n, kind, matrix })
}

/// `J₀·b`, a primitive-or-not integer point on the light cone
/// `−y₀² + y₁² + y₂² + y₃² = 0`.
pub fn lorentz_point(q: &DescartesQuadruple) -> [Integer; 4] {
    let b = q.0.clone().map(|x| from_int(&x));
    j0().mul_vec(&b).map(|y| as_integer(&y).expect("Descartes sums are even"))
}

/// Inverse of [`lorentz_point`].
pub fn from_lorentz_point(y: &[Integer; 4]) -> Result<DescartesQuadruple> {
    let v = y.clone().map(|x| from_int(&x));
    let b = j0().mul_vec(&v);
    let mut out: [Integer; 4] = std::array::from_fn(|_| Integer::zero());
    for (o, x) in out.iter_mut().zip(&b) {
        *o = as_integer(x).ok_or(Error::NotIntegral)?;
    }
    DescartesQuadruple::new(out)
}
