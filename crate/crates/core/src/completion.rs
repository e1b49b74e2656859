//! Completing three mutually tangent circles to the two Descartes
//! configurations that contain them.

use num_traits::{One, Signed, Zero};

use crate::exact::rational::{frac, rat, rational_text, sqrt_exact};
use crate::exact::{pair_relation, AugmentedMatrix, Circle, PairRelation, Rational};
use crate::{Error, Result};

/// Three pairwise tangent circles, reoriented so that their interiors are
/// pairwise disjoint (all inversive products `−1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentTriple([Circle; 3]);

impl TangentTriple {
    pub fn new(circles: [Circle; 3]) -> Result<Self> {
        for c in &circles {
            if !c.is_valid() {
                return Err(Error::InvalidAugmented);
            }
        }
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let mut positive = Vec::new();
        for &(i, j) in &pairs {
            match pair_relation(&circles[i], &circles[j]) {
                PairRelation::ExternallyTangent => {}
                PairRelation::InternallyTangent => positive.push((i, j)),
                _ => return Err(Error::NotTangent(i + 1, j + 1)),
            }
        }
        let mut circles = circles;
        match positive.len() {
            0 => {}
            2 => {
                let (a, b) = (positive[0], positive[1]);
                let shared = [a.0, a.1].into_iter().find(|k| *k == b.0 || *k == b.1).unwrap();
                circles[shared] = circles[shared].neg();
            }
            _ => return Err(Error::DegenerateTriple("tangencies cannot all be made external")),
        }
        Ok(TangentTriple(circles))
    }

    pub fn circles(&self) -> &[Circle; 3] {
        &self.0
    }

    fn sum(&self) -> Circle {
        self.0[0].add(&self.0[1]).add(&self.0[2])
    }
}

/// Exact Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Complex { re, im }
    }

    pub fn zero() -> Self {
        Complex::new(Rational::zero(), Rational::zero())
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        Complex::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }

    pub fn scale(&self, s: &Rational) -> Complex {
        Complex::new(&self.re * s, &self.im * s)
    }

    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Exact square root with non-negative real part, if it is rational.
    pub fn sqrt(&self) -> Option<Complex> {
        let m = sqrt_exact(&(&self.re * &self.re + &self.im * &self.im))?;
        let u = sqrt_exact(&((&m + &self.re) / rat(2)))?;
        let v = sqrt_exact(&((&m - &self.re) / rat(2)))?;
        let v = if self.im.is_negative() { -v } else { v };
        let r = Complex::new(u, v);
        (r.mul(&r) == *self).then_some(r)
    }
}

fn bz(c: &Circle) -> Complex {
    Complex::new(c.bx.clone(), c.by.clone())
}

/// Cocurvature of a row `(?, b, bx, by)` from `⟨w, pivot⟩ = −1`; the pivot
/// must be a circle.
fn cocurvature_from(b: &Rational, w: &Complex, pivot: &Circle) -> Rational {
    let dot = &w.re * &pivot.bx + &w.im * &pivot.by;
    (rat(2) * dot + rat(2) - b * &pivot.bbar) / &pivot.b
}

fn finish(t: &TangentTriple, fourth: [Circle; 2]) -> Result<[AugmentedMatrix; 2]> {
    let [a, b, c] = t.0.clone();
    let mut out = fourth.map(|d| AugmentedMatrix::new([a.clone(), b.clone(), c.clone(), d]));
    for w in &mut out {
        if w.is_err() {
            return Err(Error::InvalidAugmented);
        }
    }
    let [x, y] = out.map(Result::unwrap);
    let key = |w: &AugmentedMatrix| (w.row(3).b.clone(), w.row(3).clone());
    Ok(if key(&x) <= key(&y) { [x, y] } else { [y, x] })
}

/// Both completions, smaller fourth curvature first (ties by row order).
///
/// With three genuine circles the fourth curvature comes from the
/// Descartes quadratic and the fourth `b·z` from the complex Descartes
/// relation, paired through the linear relation
/// `(Σb − b₄)·b₄z₄ = 2·Σb²z − (Σb + b₄)·Σbz`, or through
/// `b₄z₄ = Σbz ± 2b₁(z₂ − z₃)i` at a double root. A line in the triple
/// switches to the row form: `w₄ = w₁ + w₂ + w₃ ± 2u` with `u` the unit
/// vector orthogonal to the triple.
pub fn complete(t: &TangentTriple) -> Result<[AugmentedMatrix; 2]> {
    if t.0.iter().any(Circle::is_line) {
        return complete_by_rows(t);
    }
    let [c1, c2, c3] = &t.0;
    let (b1, b2, b3) = (&c1.b, &c2.b, &c3.b);
    let sb = b1 + b2 + b3;
    let rad = b1 * b2 + b2 * b3 + b3 * b1;
    let root = sqrt_exact(&rad).ok_or_else(|| Error::NoRationalSqrt(rational_text(&rad)))?;
    let w: Vec<Complex> = t.0.iter().map(bz).collect();
    let sw = w[0].add(&w[1]).add(&w[2]);
    let prod = w[0].mul(&w[1]).add(&w[1].mul(&w[2])).add(&w[2].mul(&w[0]));
    let sigma = prod
        .sqrt()
        .ok_or_else(|| Error::NoRationalSqrt(format!("{} + {}i", rational_text(&prod.re), rational_text(&prod.im))))?;
    let candidates = [sw.add(&sigma.scale(&rat(2))), sw.sub(&sigma.scale(&rat(2)))];
    let fourth: Vec<Circle> = if root.is_zero() {
        // Double root: b₄ = Σb for both completions.
        let z2 = Complex::new(&c2.bx / b2, &c2.by / b2);
        let z3 = Complex::new(&c3.bx / b3, &c3.by / b3);
        let d = z2.sub(&z3).mul(&Complex::new(Rational::zero(), Rational::one())).scale(&(rat(2) * b1));
        [sw.add(&d), sw.sub(&d)]
            .into_iter()
            .map(|w4| {
                debug_assert!(candidates.contains(&w4));
                Circle::new(cocurvature_from(&sb, &w4, c1), sb.clone(), w4.re, w4.im)
            })
            .collect()
    } else {
        let q = w[0].scale(b1).add(&w[1].scale(b2)).add(&w[2].scale(b3));
        [&sb + rat(2) * &root, &sb - rat(2) * &root]
            .into_iter()
            .map(|b4| {
                let lhs_coeff = &sb - &b4;
                let rhs = q.scale(&rat(2)).sub(&sw.scale(&(&sb + &b4)));
                let w4 = candidates
                    .iter()
                    .find(|c| c.scale(&lhs_coeff) == rhs)
                    .cloned()
                    .ok_or(Error::DegenerateTriple("no complex root satisfies the linear relation"))?;
                Ok(Circle::new(cocurvature_from(&b4, &w4, c1), b4, w4.re, w4.im))
            })
            .collect::<Result<_>>()?
    };
    finish(t, [fourth[0].clone(), fourth[1].clone()])
}

/// Row-form completion, valid for any triple.
pub fn complete_by_rows(t: &TangentTriple) -> Result<[AugmentedMatrix; 2]> {
    let v = orthogonal_complement(&t.0);
    let norm = v.inversive(&v);
    let s = sqrt_exact(&norm).filter(|s| s.is_positive()).ok_or_else(|| Error::NoRationalSqrt(rational_text(&norm)))?;
    let u = v.scale(&(rat(2) / s));
    let sum = t.sum();
    finish(t, [sum.add(&u), sum.sub(&u)])
}

/// Nonzero `v` with `⟨v, w_i⟩ = 0` for the three rows, by cofactors of the
/// 3×4 system.
fn orthogonal_complement(w: &[Circle; 3]) -> Circle {
    // ⟨v, w⟩ = v · (−b/2, −bbar/2, bx, by) as a Euclidean dot product.
    let rows: Vec<[Rational; 4]> =
        w.iter().map(|c| [-&c.b * frac(1, 2), -&c.bbar * frac(1, 2), c.bx.clone(), c.by.clone()]).collect();
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&j| j != skip).collect();
        let m = |i: usize, j: usize| &rows[i][cols[j]];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    let v: [Rational; 4] = std::array::from_fn(|j| if j % 2 == 0 { minor(j) } else { -minor(j) });
    Circle::from_array(v)
}

/// Integer curvatures and `b·z ∈ ℤ[i]` for all three circles. When true,
/// both completions are checked to be strongly integral.
pub fn strong_integrality_from_three(t: &TangentTriple) -> Result<bool> {
    let integral = t.0.iter().all(Circle::is_strongly_integral);
    if integral {
        let [x, y] = complete(t)?;
        assert!(
            x.is_strongly_integral() && y.is_strongly_integral(),
            "integral triple completed to a non-integral configuration"
        );
    }
    Ok(integral)
}

/// `Σ(b z)² = ½(Σ b z)²` and `Σ b·(b z) = ½(Σ b z)(Σ b)` over the four rows.
pub fn complex_descartes_holds(w: &AugmentedMatrix) -> bool {
    let zs: Vec<Complex> = w.rows().iter().map(bz).collect();
    let sw = zs.iter().fold(Complex::zero(), |a, z| a.add(z));
    let sq = zs.iter().fold(Complex::zero(), |a, z| a.add(&z.mul(z)));
    let sb: Rational = w.curvatures().iter().sum();
    let bw = w.rows().iter().zip(&zs).fold(Complex::zero(), |a, (c, z)| a.add(&z.scale(&c.b)));
    sq == sw.mul(&sw).scale(&frac(1, 2)) && bw == sw.scale(&(sb * frac(1, 2)))
}
