//! Arbitrary-precision rational numbers and the distance to the nearest
//! integer, the value space for every time and loneliness amount in this
//! crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// An exact rational number, always stored in reduced form with a positive
/// denominator (the sign lives in the numerator).
///
/// Equality, ordering, and hashing are all componentwise on the reduced
/// form, so values can be deduplicated and used as map keys directly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in reduced form. Fails on a zero denominator.
    pub fn new<N, D>(num: N, den: D) -> Result<Self>
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn one_half() -> Self {
        Rational(BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    /// Fractional part in `[0, 1)`, also for negative values.
    pub fn frac(&self) -> Self {
        Rational(&self.0 - self.0.floor())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Lossy conversion for plot output; never used in computations.
    pub fn to_f64(&self) -> f64 {
        let n = self.0.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.0.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

/// Distance from `x` to the nearest integer, in `[0, 1/2]`.
///
/// Satisfies `norm_dist(x) = norm_dist(-x) = norm_dist(x + 1)`, with `1/2`
/// attained exactly when `x - 1/2` is an integer.
pub fn norm_dist(x: &Rational) -> Rational {
    let f = x.frac();
    let complement = Rational::one() - f.clone();
    if f <= complement {
        f
    } else {
        complement
    }
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_list(xs: &[u64]) -> Result<u64> {
    if xs.is_empty() {
        return Err(Error::EmptyList);
    }
    Ok(xs.iter().fold(0u64, |acc, &x| acc.gcd(&x)))
}

/// Least common multiple of a nonempty list of positive integers.
///
/// Fails if the result does not fit in 64 bits.
pub fn lcm_list(xs: &[u64]) -> Result<u64> {
    if xs.is_empty() {
        return Err(Error::EmptyList);
    }
    let mut acc: u64 = 1;
    for &x in xs {
        let g = acc.gcd(&x);
        acc = (acc / g).checked_mul(x).ok_or(Error::LcmOverflow)?;
    }
    Ok(acc)
}

impl fmt::Display for Rational {
    /// Prints the reduced form as `p/q`, omitting `/q` when `q = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("invalid rational literal {s:?}"));
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s.trim()).map_err(|_| bad())?;
                Ok(Rational::from_integer(n))
            }
            Some((num, den)) => {
                let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
                Rational::new(n, d)
            }
        }
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
