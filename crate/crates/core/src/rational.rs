//! Exact arithmetic used throughout the crate.
//!
//! Coordinates are arbitrary-precision rationals. Strip and column extents may
//! additionally be `-inf` / `inf`; those are kept symbolic in [`ExtRational`].

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// Builds an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds `num / den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| ParseRationalError(s.to_string()))?;
    Ok(r)
}

/// Canonical text form: reduced `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a rational number: {0:?}")]
pub struct ParseRationalError(pub String);

/// A rational number or one of the two symbolic infinities.
///
/// The derived ordering places `NegInf` below every finite value and `PosInf`
/// above.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            _ => None,
        }
    }

    /// Shifts by a finite amount; infinities absorb the shift.
    pub fn shifted(&self, by: &Rational) -> ExtRational {
        match self {
            ExtRational::Finite(r) => ExtRational::Finite(r + by),
            other => other.clone(),
        }
    }

    /// `self - other`, or `None` for the indeterminate `inf - inf` cases.
    pub fn checked_sub(&self, other: &ExtRational) -> Option<ExtRational> {
        use ExtRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Some(Finite(a - b)),
            (PosInf, Finite(_)) | (PosInf, NegInf) => Some(PosInf),
            (NegInf, Finite(_)) | (NegInf, PosInf) => Some(NegInf),
            (Finite(_), NegInf) => Some(PosInf),
            (Finite(_), PosInf) => Some(NegInf),
            (PosInf, PosInf) | (NegInf, NegInf) => None,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(r) => write!(f, "{r}"),
        }
    }
}

impl FromStr for ExtRational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtRational::PosInf),
            "-inf" => Ok(ExtRational::NegInf),
            other => parse_rational(other).map(ExtRational::Finite),
        }
    }
}

/// Exact complex number `re + im·i`; values of periods of `dz`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_purely_imaginary(&self) -> bool {
        self.re.is_zero()
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: Self) -> Self {
        ComplexRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: Self) -> Self {
        ComplexRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Neg for ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> Self {
        ComplexRational::new(-self.re, -self.im)
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_ordering() {
        let a = ExtRational::NegInf;
        let b = ExtRational::Finite(int(-1000));
        let c = ExtRational::Finite(ratio(1, 3));
        let d = ExtRational::PosInf;
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn ext_parse_and_display() {
        for s in ["-inf", "inf", "3/2", "-7", "0"] {
            let e: ExtRational = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert_eq!("6/4".parse::<ExtRational>().unwrap().to_string(), "3/2");
        assert!("x".parse::<ExtRational>().is_err());
        assert!("1/0".parse::<ExtRational>().is_err());
    }

    #[test]
    fn indeterminate_difference() {
        assert_eq!(ExtRational::PosInf.checked_sub(&ExtRational::PosInf), None);
        assert_eq!(
            ExtRational::PosInf.checked_sub(&ExtRational::Finite(int(4))),
            Some(ExtRational::PosInf)
        );
        assert_eq!(
            ExtRational::Finite(int(4)).checked_sub(&ExtRational::Finite(int(1))),
            Some(ExtRational::Finite(int(3)))
        );
    }
}
