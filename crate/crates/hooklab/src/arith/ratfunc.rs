//! Reduced univariate rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, Ring};
use super::poly::UniPoly;
use super::series::TruncSeries;
use crate::error::{HookError, Result};

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Reduces `num / den`; errors on a zero denominator.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(HookError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lead = den.leading().recip();
        Ok(RatFunc { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    /// The formal variable.
    pub fn var() -> Self {
        RatFunc::from_poly(UniPoly::var())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc::from_poly(UniPoly::constant(c))
    }

    /// `c·t^k` for any integer `k`.
    pub fn monomial(c: BigRational, k: i64) -> Self {
        if k >= 0 {
            RatFunc::from_poly(UniPoly::monomial(c, k as usize))
        } else {
            RatFunc::new(UniPoly::constant(c), UniPoly::monomial(BigRational::one(), (-k) as usize))
                .expect("nonzero monomial")
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// True when the denominator is constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Value at a rational point; a pole error when the denominator vanishes there.
    pub fn eval_at(&self, t: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(HookError::Pole(format!("denominator vanishes at {t}")));
        }
        Ok(self.num.eval(t) / d)
    }

    /// `(v, f)` with `self = t^v · f` and `f` regular and nonzero at 0.
    fn split_valuation(&self) -> (i64, RatFunc) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let vn = self.num.valuation();
        let vd = self.den.valuation();
        let f = RatFunc { num: self.num.shift_down(vn), den: self.den.shift_down(vd) };
        (vn as i64 - vd as i64, f)
    }

    /// Power series at 0 up to and including `t^n`; errors on a pole at 0.
    pub fn series_at_zero(&self, n: usize) -> Result<TruncSeries> {
        let (v, f) = self.split_valuation();
        if v < 0 {
            return Err(HookError::Pole("pole at 0; use laurent_coefficient".into()));
        }
        let s = TruncSeries::from_poly(&f.num, n).checked_div(&TruncSeries::from_poly(&f.den, n))?;
        Ok(s.shift(v as usize))
    }

    /// Lowest exponent with a nonzero Laurent coefficient at 0.
    pub fn order_at_zero(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.split_valuation().0)
        }
    }

    /// Coefficient of `t^k` in the Laurent expansion at 0.
    pub fn laurent_coefficient(&self, k: i64) -> BigRational {
        let (v, f) = self.split_valuation();
        if self.is_zero() || k < v {
            return BigRational::zero();
        }
        let idx = (k - v) as usize;
        let s = TruncSeries::from_poly(&f.num, idx)
            .checked_div(&TruncSeries::from_poly(&f.den, idx))
            .expect("regular at zero");
        s.coeff(idx)
    }

    /// Substitutes `t ↦ c·t`.
    pub fn rescale_var(&self, c: &BigRational) -> Result<RatFunc> {
        RatFunc::new(self.num.rescale_var(c), self.den.rescale_var(c))
    }

    /// Substitutes `t ↦ 1/t`.
    pub fn invert_var(&self) -> RatFunc {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let rev = |p: &UniPoly, deg: usize| {
            let mut c = p.coeffs().to_vec();
            c.resize(deg + 1, BigRational::zero());
            c.reverse();
            UniPoly::new(c)
        };
        // num(1/t)/den(1/t) = t^{dd-dn} rev(num)/rev(den)
        let base = RatFunc::new(rev(&self.num, dn), rev(&self.den, dd)).expect("nonzero denominator");
        base * RatFunc::monomial(BigRational::one(), dd as i64 - dn as i64)
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_polynomial() {
            return self.num.display_with(var);
        }
        format!("({})/({})", self.num.display_with(var), self.den.display_with(var))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc { num: UniPoly::zero(), den: UniPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc { num: UniPoly::one(), den: UniPoly::one() }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        // a/(g b') + c/(g d') = (a d' + c b') / (g b' d'); only g can share factors with the numerator.
        let g = self.den.gcd(&rhs.den);
        let b1 = self.den.exact_div(&g);
        let d1 = rhs.den.exact_div(&g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() { (num, g) } else { (num.exact_div(&h), g.exact_div(&h)) };
        let den = &(&g * &b1) * &d1;
        let lead = den.leading().recip();
        RatFunc { num: num.scale(&lead), den: den.scale(&lead) }
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.exact_div(&g1);
        let d = rhs.den.exact_div(&g1);
        let c = rhs.num.exact_div(&g2);
        let b = self.den.exact_div(&g2);
        let den = &b * &d;
        let lead = den.leading().recip();
        RatFunc { num: (&a * &c).scale(&lead), den: den.scale(&lead) }
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;

    /// Panics on division by zero; use [`Field::checked_div`] where poles can occur.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("rational function division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Ring for RatFunc {
    fn from_int(v: i64) -> Self {
        RatFunc::constant(BigRational::from_int(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        RatFunc::constant(r.clone())
    }
}

impl Field for RatFunc {
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(HookError::DivisionByZero);
        }
        let inv = RatFunc { num: rhs.den.clone(), den: rhs.num.clone() };
        let lead = inv.den.leading().recip();
        let inv = RatFunc { num: inv.num.scale(&lead), den: inv.den.scale(&lead) };
        Ok(self * &inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{frac, rat};

    fn t() -> RatFunc {
        RatFunc::var()
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn geometric_series() {
        let f = c(1).checked_div(&(c(1) - t())).unwrap();
        let s = f.series_at_zero(3).unwrap();
        assert_eq!(s.coeffs(), &[rat(1), rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn self_quotient_is_one() {
        let p = &(t() * t()) + &c(3);
        let q = p.checked_div(&p).unwrap();
        assert_eq!(q, RatFunc::one());
        assert_eq!(q.eval_at(&frac(5, 7)).unwrap(), rat(1));
    }

    #[test]
    fn canonical_form_is_unique() {
        // (t^2-1)/(2t-2) = (t+1)/2
        let a = RatFunc::new(UniPoly::from_ints(&[-1, 0, 1]), UniPoly::from_ints(&[-2, 2])).unwrap();
        let b = (t() + c(1)).checked_div(&c(2)).unwrap();
        assert_eq!(a, b);
        assert!(a.is_polynomial());
    }

    #[test]
    fn poles_are_reported() {
        let f = c(1).checked_div(&(t() - c(2))).unwrap();
        assert!(f.eval_at(&rat(2)).is_err());
        assert!(c(1).checked_div(&RatFunc::zero()).is_err());
        let g = c(1).checked_div(&t()).unwrap();
        assert!(g.series_at_zero(2).is_err());
    }

    #[test]
    fn laurent_coefficients() {
        // (1+t)^2 / t^2 = t^-2 + 2 t^-1 + 1
        let f = (&(t() + c(1)) * &(t() + c(1))).checked_div(&(t() * t())).unwrap();
        assert_eq!(f.order_at_zero(), Some(-2));
        assert_eq!(f.laurent_coefficient(-2), rat(1));
        assert_eq!(f.laurent_coefficient(-1), rat(2));
        assert_eq!(f.laurent_coefficient(0), rat(1));
        assert_eq!(f.laurent_coefficient(1), rat(0));
    }

    #[test]
    fn inverting_the_variable() {
        let f = c(1).checked_div(&(c(1) - t())).unwrap();
        // 1/(1-1/t) = t/(t-1)
        let g = t().checked_div(&(t() - c(1))).unwrap();
        assert_eq!(f.invert_var(), g);
        assert_eq!(t().invert_var(), c(1).checked_div(&t()).unwrap());
    }
}
