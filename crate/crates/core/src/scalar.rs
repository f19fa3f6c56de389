//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Scalar`], a field with exact
//! arithmetic. Two implementations are provided: [`Rational`] (arbitrary
//! precision fractions) and [`Gaussian`] (the Gaussian rationals `a + b i`).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = BigRational;
pub type Gaussian = Complex<BigRational>;

/// An exact field of characteristic zero containing the rationals.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(v)))
    }

    /// Literal form used in reports: `p/q` or `p/q+r/s i`.
    fn to_literal(&self) -> String;

    fn parse_literal(s: &str) -> Result<Self, Error>;

    /// The rational value, when the scalar lies in the rationals.
    fn as_rational(&self) -> Option<Rational>;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_literal(&self) -> String {
        self.to_string()
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        parse_rational(s)
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl Scalar for Gaussian {
    fn from_rational(q: &Rational) -> Self {
        Complex::new(q.clone(), Rational::zero())
    }

    fn to_literal(&self) -> String {
        if self.im.is_zero() {
            return self.re.to_string();
        }
        if self.im.is_negative() {
            format!("{}-{} i", self.re, -self.im.clone())
        } else {
            format!("{}+{} i", self.re, self.im)
        }
    }

    fn parse_literal(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Complex::new(parse_rational(t)?, Rational::zero()));
        };
        let body = body.trim_end();
        // split at the last sign that is not leading and does not follow '/'
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re = parse_rational(&body[..idx])?;
                let im_str = body[idx..].trim_start_matches('+').trim();
                let im = if im_str.is_empty() || im_str == "-" {
                    let one = Rational::one();
                    if im_str == "-" {
                        -one
                    } else {
                        one
                    }
                } else {
                    parse_rational(im_str)?
                };
                Ok(Complex::new(re, im))
            }
            None => {
                let im = if body.is_empty() || body == "+" {
                    Rational::one()
                } else if body == "-" {
                    -Rational::one()
                } else {
                    parse_rational(body)?
                };
                Ok(Complex::new(Rational::zero(), im))
            }
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.to_string(), d.to_string()),
        None => (t.clone(), "1".to_string()),
    };
    let num: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The imaginary unit.
pub fn imag_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn gaussian(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

pub fn conj(z: &Gaussian) -> Gaussian {
    Complex::new(z.re.clone(), -z.im.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_round_trip() {
        for s in ["0", "3", "-7/2", "5/10"] {
            let q = Rational::parse_literal(s).unwrap();
            assert_eq!(Rational::parse_literal(&q.to_literal()).unwrap(), q);
        }
        assert_eq!(Rational::parse_literal("5/10").unwrap(), rat(1, 2));
        assert!(Rational::parse_literal("1/0").is_err());
        assert!(Rational::parse_literal("x").is_err());
    }

    #[test]
    fn gaussian_literals() {
        let z = Gaussian::parse_literal("1/2+3/4 i").unwrap();
        assert_eq!(z, gaussian(rat(1, 2), rat(3, 4)));
        let w = Gaussian::parse_literal("-1/2-3 i").unwrap();
        assert_eq!(w, gaussian(rat(-1, 2), int(-3)));
        assert_eq!(Gaussian::parse_literal("-i").unwrap(), gaussian(int(0), int(-1)));
        assert_eq!(Gaussian::parse_literal("2").unwrap(), gaussian(int(2), int(0)));
        for z in [z, w, imag_unit(), gaussian(int(0), rat(-5, 3))] {
            assert_eq!(Gaussian::parse_literal(&z.to_literal()).unwrap(), z);
        }
    }

    #[test]
    fn gaussian_field_ops_are_exact() {
        let z = gaussian(rat(1, 3), rat(-2, 5));
        let one = z.clone() * z.inv();
        assert!(one.is_one());
        assert_eq!(imag_unit() * imag_unit(), Gaussian::from_i64(-1));
    }
}
