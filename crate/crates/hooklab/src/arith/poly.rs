//! Dense univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Ring;

/// `Σ coeffs[k] t^k`; no trailing zero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_int(c)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        UniPoly::from_ints(&[0, 1])
    }

    /// `t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest `k` with `t^k` dividing `self`; zero for the zero polynomial.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divides by `t^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        UniPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Euclidean division `(q, r)` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let dr = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= dr {
            return (UniPoly::zero(), self.clone());
        }
        let lead_inv = rhs.leading().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); r.len() - dr];
        for k in (0..q.len()).rev() {
            let c = &r[k + dr] * &lead_inv;
            if !c.is_zero() {
                for (i, b) in rhs.coeffs.iter().enumerate() {
                    let t = &c * b;
                    r[k + i] -= t;
                }
            }
            q[k] = c;
        }
        r.truncate(dr);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Exact quotient; panics in debug builds when the remainder is nonzero.
    pub fn exact_div(&self, rhs: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Integer-coefficient primitive part with positive leading coefficient.
    fn primitive(&self) -> (BigRational, Vec<BigInt>) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        let prim = ints.into_iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), prim)
    }

    /// Monic greatest common divisor (primitive-remainder Euclid).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_poly(&self.primitive().1);
        let mut b = int_poly(&other.primitive().1);
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.coeffs.len() == 1 {
                return UniPoly::one();
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { int_poly(&r.primitive().1) };
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Substitutes `t ↦ c·t`.
    pub fn rescale_var(&self, c: &BigRational) -> UniPoly {
        let mut p = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &p);
            p = &p * c;
        }
        UniPoly::new(out)
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

fn int_poly(c: &[BigInt]) -> UniPoly {
    UniPoly::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
}

/// Pseudo-remainder of integer polynomials.
fn pseudo_rem(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let db = b.coeffs.len() - 1;
    let lb = b.leading();
    let mut r = a.coeffs.clone();
    while r.len() > db && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            let t = &lr * c;
            r[shift + i] -= t;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    UniPoly::new(r)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::from_ints(&[1])
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

impl Ring for UniPoly {
    fn from_int(v: i64) -> Self {
        UniPoly::from_ints(&[v])
    }

    fn from_rational(r: &BigRational) -> Self {
        UniPoly::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::frac;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        // (t+1)(t+2) and (t+1)(t-3)
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        let (q, r) = a.div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]).monic());
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), UniPoly::one());
    }

    #[test]
    fn evaluation_and_display() {
        let a = p(&[1, -2, 3]);
        assert_eq!(a.eval(&frac(1, 2)), frac(3, 4));
        assert_eq!(a.display_with("b"), "3*b^2 - 2*b + 1");
        assert_eq!(UniPoly::zero().display_with("b"), "0");
        assert_eq!(a.derivative(), p(&[-2, 6]));
        assert_eq!(a.rescale_var(&frac(2, 1)), p(&[1, -4, 12]));
    }
}
