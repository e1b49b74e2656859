//! Helpers over `BigRational`: construction, exact square roots, decimal
//! rendering and parsing.

use num_bigint::{BigInt, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_int(n: &Integer) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn half() -> Rational {
    frac(1, 2)
}

/// Exact square root of a non-negative integer, if it is a perfect square.
pub fn isqrt_exact(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a non-negative rational, if numerator and
/// denominator are both perfect squares.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    let p = isqrt_exact(q.numer())?;
    let d = isqrt_exact(q.denom())?;
    Some(Rational::new(p, d))
}

pub fn as_integer(q: &Rational) -> Option<Integer> {
    q.is_integer().then(|| q.to_integer())
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a Integer>) -> Integer {
    xs.into_iter().fold(Integer::zero(), |g, x| g.gcd(x))
}

/// `x mod m` normalized into `[0, m)` for `m > 0`.
pub fn modulo(x: &Integer, m: &Integer) -> Integer {
    x.mod_floor(m)
}

/// Decimal text with at most `sig` significant digits, half-up rounding on
/// the absolute value, no exponent and no trailing zeros.
pub fn to_decimal(q: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if q.is_zero() {
        return "0".into();
    }
    let neg = q.is_negative();
    let a = q.abs();
    // e = floor(log10 a), estimated then corrected.
    let mut e = estimate_log10(&a);
    while pow10(e) > a {
        e -= 1;
    }
    while pow10(e + 1) <= a {
        e += 1;
    }
    let shift = sig as i64 - 1 - e;
    let scaled = &a * pow10(shift);
    let mut digits = (scaled + half()).floor().to_integer();
    let mut shift = shift;
    if digits >= BigInt::from(10).pow(sig as u32) {
        digits /= 10;
        shift -= 1;
    }
    let text = digits.to_str_radix(10);
    let mut out = if shift <= 0 {
        let mut s = text;
        s.extend(std::iter::repeat_n('0', (-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        let (int_part, frac_part) = if text.len() > shift {
            let (a, b) = text.split_at(text.len() - shift);
            (a.to_string(), b.to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat(shift - text.len()), text))
        };
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part
        } else {
            format!("{int_part}.{frac_part}")
        }
    };
    if neg {
        out.insert(0, '-');
    }
    out
}

fn pow10(e: i64) -> Rational {
    let p = BigInt::from(10).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

fn estimate_log10(a: &Rational) -> i64 {
    let n = a.numer().to_str_radix(10).len() as i64;
    let d = a.denom().to_str_radix(10).len() as i64;
    n - d
}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"-1.25"`.
pub fn parse_rational(s: &str) -> Result<Rational, crate::Error> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("invalid rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        if fp.is_empty() && ip_digits.is_empty() {
            return Err(bad());
        }
        if !ip_digits.chars().all(|c| c.is_ascii_digit()) || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let joined = format!("{ip_digits}{fp}");
        let joined = if joined.is_empty() { "0".to_string() } else { joined };
        let mut n: BigInt = joined.parse().map_err(|_| bad())?;
        if neg {
            n = -n;
        }
        return Ok(Rational::new(n, BigInt::from(10).pow(fp.len() as u32)));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn rational_text(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn sign(q: &Rational) -> Sign {
    q.numer().sign()
}

/// Serde adapter: rationals travel as canonical strings, and integers or
/// decimal strings are accepted on input.
pub mod serde_rational {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_text(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a rational as a string or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
                parse_rational(v).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(rat(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational::from_integer(BigInt::from(v)))
            }
        }
        d.deserialize_any(V)
    }
}

/// Serde adapter for big integers as decimal strings.
pub mod serde_integer {
    use super::*;
    use serde::{de, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &Integer, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Integer, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Integer;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Integer, E> {
                v.trim().parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Integer, E> {
                Ok(BigInt::from(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Integer, E> {
                Ok(BigInt::from(v))
            }
        }
        d.deserialize_any(V)
    }
}
