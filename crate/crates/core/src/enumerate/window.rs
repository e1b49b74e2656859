use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::rational::{parse_rational, rat, rational_text, serde_rational};
use crate::exact::{Circle, Isometry, Rational};
use crate::{Error, Result};

/// Closed axis-parallel box `[xmin, xmax] × [ymin, ymax]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    #[serde(with = "serde_rational")]
    pub xmin: Rational,
    #[serde(with = "serde_rational")]
    pub xmax: Rational,
    #[serde(with = "serde_rational")]
    pub ymin: Rational,
    #[serde(with = "serde_rational")]
    pub ymax: Rational,
}

fn sq(x: &Rational) -> Rational {
    x * x
}

impl Window {
    pub fn new(xmin: Rational, xmax: Rational, ymin: Rational, ymax: Rational) -> Result<Self> {
        if xmin >= xmax || ymin >= ymax {
            return Err(Error::EmptyWindow);
        }
        Ok(Window { xmin, xmax, ymin, ymax })
    }

    pub fn from_i64(xmin: i64, xmax: i64, ymin: i64, ymax: i64) -> Result<Self> {
        Self::new(rat(xmin), rat(xmax), rat(ymin), rat(ymax))
    }

    pub fn unit_square() -> Self {
        Self::from_i64(0, 1, 0, 1).unwrap()
    }

    fn corners(&self) -> [(&Rational, &Rational); 4] {
        [(&self.xmin, &self.ymin), (&self.xmin, &self.ymax), (&self.xmax, &self.ymin), (&self.xmax, &self.ymax)]
    }

    pub fn contains_point(&self, (x, y): (&Rational, &Rational)) -> bool {
        &self.xmin <= x && x <= &self.xmax && &self.ymin <= y && y <= &self.ymax
    }

    fn clamp<'a>(v: &'a Rational, lo: &'a Rational, hi: &'a Rational) -> &'a Rational {
        if v < lo {
            lo
        } else if v > hi {
            hi
        } else {
            v
        }
    }

    /// Squared distance from `c` to the nearest point of the box.
    fn near_dist2(&self, (x, y): (&Rational, &Rational)) -> Rational {
        let px = Self::clamp(x, &self.xmin, &self.xmax);
        let py = Self::clamp(y, &self.ymin, &self.ymax);
        sq(&(x - px)) + sq(&(y - py))
    }

    fn far_dist2(&self, (x, y): (&Rational, &Rational)) -> Rational {
        self.corners().iter().map(|(cx, cy)| sq(&(x - *cx)) + sq(&(y - *cy))).max().unwrap()
    }

    /// Range of `n·p` over the box.
    fn dot_range(&self, nx: &Rational, ny: &Rational) -> (Rational, Rational) {
        let v: Vec<Rational> = self.corners().iter().map(|(x, y)| nx * *x + ny * *y).collect();
        (v.iter().min().unwrap().clone(), v.into_iter().max().unwrap())
    }

    /// Whether the circle as a point set meets the box: the closed disk for
    /// `b ≠ 0`, the line itself for `b = 0`. Orientation plays no role.
    pub fn meets_circle(&self, c: &Circle) -> bool {
        if c.b.is_zero() {
            let h = &c.bbar / rat(2);
            let (lo, hi) = self.dot_range(&c.bx, &c.by);
            lo <= h && h <= hi
        } else {
            let (x, y) = c.center().unwrap();
            self.near_dist2((&x, &y)) * sq(&c.b) <= rat(1)
        }
    }

    /// Whether the closed oriented interior of `c` meets the box.
    pub fn meets_interior(&self, c: &Circle) -> bool {
        if c.b.is_zero() {
            let (_, hi) = self.dot_range(&c.bx, &c.by);
            hi >= &c.bbar / rat(2)
        } else {
            let (x, y) = c.center().unwrap();
            if c.b.is_positive() {
                self.near_dist2((&x, &y)) * sq(&c.b) <= rat(1)
            } else {
                self.far_dist2((&x, &y)) * sq(&c.b) >= rat(1)
            }
        }
    }

    /// Image of the box under an isometry (which maps boxes to boxes).
    pub fn transform(&self, g: &Isometry) -> Window {
        let a = g.apply((&self.xmin, &self.ymin));
        let b = g.apply((&self.xmax, &self.ymax));
        let (xmin, xmax) = if a.0 <= b.0 { (a.0, b.0) } else { (b.0, a.0) };
        let (ymin, ymax) = if a.1 <= b.1 { (a.1, b.1) } else { (b.1, a.1) };
        Window { xmin, xmax, ymin, ymax }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = [&self.xmin, &self.xmax, &self.ymin, &self.ymax].map(rational_text);
        write!(f, "{}", v.join(","))
    }
}

/// `x0,x1,y0,y1`, each a rational or decimal.
impl FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [a, b, c, d] = parts.as_slice() else {
            return Err(Error::Parse(format!("window needs four comma-separated values, got {s:?}")));
        };
        Window::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?, parse_rational(d)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn parse_and_reject_empty() {
        let w: Window = "0,1,-1/2,0.5".parse().unwrap();
        assert_eq!(w.ymin, frac(-1, 2));
        assert_eq!(w.to_string(), "0,1,-1/2,1/2");
        assert_eq!("1,0,0,1".parse::<Window>(), Err(Error::EmptyWindow));
        assert!("0,1,0".parse::<Window>().is_err());
    }

    #[test]
    fn circle_and_line_meeting() {
        let w = Window::unit_square();
        // Unit circle about (-1, 0) touches the corner (0, 0).
        assert!(w.meets_circle(&Circle::from_i64([0, 1, -1, 0])));
        assert!(!w.meets_circle(&Circle::from_center(rat(2), rat(-1), rat(0)).unwrap()));
        // Line y = -1 misses, y = 1 touches; orientation is irrelevant.
        assert!(!w.meets_circle(&Circle::from_i64([2, 0, 0, -1])));
        assert!(w.meets_circle(&Circle::from_i64([2, 0, 0, 1])));
        assert!(w.meets_circle(&Circle::from_i64([-2, 0, 0, -1])));
        // Diagonal x + y = 1 crosses.
        let l = Circle::line(frac(3, 5), frac(4, 5), frac(1, 2)).unwrap();
        assert!(w.meets_circle(&l));
    }

    #[test]
    fn interiors() {
        let w = Window::unit_square();
        assert!(w.meets_interior(&Circle::from_i64([2, 0, 0, 1])));
        assert!(!w.meets_interior(&Circle::from_i64([2, 0, 0, -1])));
        // Outside of a huge disk around the square misses it.
        let big = Circle::from_center(frac(-1, 10), frac(1, 2), frac(1, 2)).unwrap();
        assert!(!w.meets_interior(&big));
        assert!(w.meets_interior(&big.neg()));
        let small_out = Circle::from_center(rat(-4), frac(1, 2), frac(1, 2)).unwrap();
        assert!(w.meets_interior(&small_out));
    }

    #[test]
    fn transformed_box() {
        let w = Window::unit_square();
        let g = Isometry::linear(false, -1, 1);
        assert_eq!(w.transform(&g), Window::from_i64(-1, 0, 0, 1).unwrap());
        let t = Isometry::translation(rat(2), rat(0));
        assert_eq!(w.transform(&t), Window::from_i64(2, 3, 0, 1).unwrap());
    }
}
