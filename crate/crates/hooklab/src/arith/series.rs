//! Power series truncated at a fixed order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Ring;
use super::poly::UniPoly;
use crate::error::{HookError, Result};

/// `Σ_{k ≤ order} coeffs[k] q^k`; coefficients above `order` are discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigRational::one(), 0, order)
    }

    /// `c q^k`, zero when `k > order`.
    pub fn monomial(c: BigRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in p.coeffs().iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// Series with integer coefficients `counts[k]` at `q^k`.
    pub fn from_counts(counts: &[u64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, &c) in counts.iter().enumerate().take(order + 1) {
            s.coeffs[k] = BigRational::from_int(c as i64);
        }
        s
    }

    /// `1/(1 - q^h)` for `h ≥ 1`.
    pub fn geometric(h: usize, order: usize) -> Self {
        assert!(h >= 1);
        let mut s = Self::zero(order);
        for k in (0..=order).step_by(h) {
            s.coeffs[k] = BigRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        for i in 0..=self.order {
            if i + k <= self.order {
                s.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        s
    }

    /// Substitutes `q ↦ -q`.
    pub fn negate_var(&self) -> Self {
        let mut s = self.clone();
        for (k, c) in s.coeffs.iter_mut().enumerate() {
            if k % 2 == 1 {
                *c = -c.clone();
            }
        }
        s
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(HookError::Pole("series with zero constant term is not invertible".into()));
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order);
        out.coeffs[0] = inv0.clone();
        for k in 1..=self.order {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &out.coeffs[k - i];
                }
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn display_with(&self, var: &str) -> String {
        let p = UniPoly::new(self.coeffs.clone());
        format!("{} + O({var}^{})", p.display_with(var), self.order + 1)
    }

    fn check_order(&self, rhs: &Self) {
        assert_eq!(self.order, rhs.order, "series truncation orders differ");
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q"))
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_order(rhs);
        let mut out = TruncSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(self.order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    #[test]
    fn geometric_times_one_minus_q_is_one() {
        let g = TruncSeries::geometric(1, 5);
        let one_minus_q = TruncSeries::from_poly(&UniPoly::from_ints(&[1, -1]), 5);
        assert_eq!(&g * &one_minus_q, TruncSeries::one(5));
        assert_eq!(one_minus_q.inverse().unwrap(), g);
    }

    #[test]
    fn shifting_truncates() {
        let g = TruncSeries::geometric(2, 4).shift(3);
        assert_eq!(g.coeffs(), &[rat(0), rat(0), rat(0), rat(1), rat(0)]);
        assert!(TruncSeries::zero(3).inverse().is_err());
    }
}
