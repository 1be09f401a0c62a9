//! Scalar traits the combinatorial formulas are generic over.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{HookError, Result};

/// Commutative ring with the integers and rationals embedded.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(v: i64) -> Self;

    fn from_rational(r: &BigRational) -> Self;

    fn pow(&self, e: usize) -> Self {
        num_traits::pow::pow(self.clone(), e)
    }
}

/// A ring in which nonzero elements can be inverted.
pub trait Field: Ring {
    /// `self / rhs`, or a pole error when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    fn checked_inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power, negative exponents through inversion.
    fn powi(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs() as usize);
        if e < 0 {
            p.checked_inv()
        } else {
            Ok(p)
        }
    }
}

impl Ring for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Field for BigRational {
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(HookError::Pole("rational division by zero".into()));
        }
        Ok(self / rhs)
    }
}

impl Ring for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &BigRational) -> Self {
        r.to_f64().unwrap_or(f64::NAN)
    }

    fn pow(&self, e: usize) -> Self {
        f64::powi(*self, e as i32)
    }
}

impl Field for f64 {
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if *rhs == 0.0 {
            return Err(HookError::Pole("floating division by zero".into()));
        }
        Ok(self / rhs)
    }
}

impl Ring for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }

    fn from_rational(r: &BigRational) -> Self {
        r.to_f32().unwrap_or(f32::NAN)
    }
}

impl Field for f32 {
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if *rhs == 0.0 {
            return Err(HookError::Pole("floating division by zero".into()));
        }
        Ok(self / rhs)
    }
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_int(n)
}

/// Shorthand for `n/d`.
pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3/7"`, `"-2"` or `"5"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || HookError::Parse(format!("bad rational '{s}'"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_helpers() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn division_by_zero_is_a_pole() {
        assert!(rat(1).checked_div(&rat(0)).is_err());
        assert!(1.0f64.checked_div(&0.0).is_err());
        assert_eq!(rat(2).powi(-2).unwrap(), frac(1, 4));
    }

    #[test]
    fn float_and_exact_agree_on_small_values() {
        let x = frac(3, 8);
        assert_eq!(f64::from_rational(&x), 0.375);
        assert_eq!(f32::from_rational(&x), 0.375);
    }
}
