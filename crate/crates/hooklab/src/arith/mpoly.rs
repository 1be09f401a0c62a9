//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Ring;

/// Exponent vector, indexed by variable id; trailing zeros trimmed.
pub type Monomial = Vec<u32>;

/// `Σ c_m x^m` over a fixed, caller-defined variable numbering.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

impl MPoly {
    /// The variable with id `v`.
    pub fn var(v: usize) -> Self {
        let mut m = vec![0; v + 1];
        m[v] = 1;
        MPoly::term(BigRational::one(), m)
    }

    pub fn constant(c: BigRational) -> Self {
        MPoly::term(c, Vec::new())
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(m), c);
        }
        MPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let e = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Substitutes rational values for some variables.
    pub fn substitute(&self, values: &BTreeMap<usize, BigRational>) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = m.clone();
            for (v, e) in m.iter().enumerate() {
                if let Some(val) = values.get(&v) {
                    coef *= num_traits::pow::pow(val.clone(), *e as usize);
                    rest[v] = 0;
                }
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// Exchanges variables `a` and `b`.
    pub fn swap_vars(&self, a: usize, b: usize) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            m2.resize(m2.len().max(a.max(b) + 1), 0);
            m2.swap(a, b);
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Exact quotient by `x_a - x_b`, or `None` if it does not divide.
    pub fn div_difference(&self, a: usize, b: usize) -> Option<MPoly> {
        // Write self = Σ_k c_k x_a^k with c_k free of x_a; then
        // q = Σ_{k≥1} c_k (x_a^{k-1} + x_a^{k-2} x_b + ... + x_b^{k-1}).
        let mut q = MPoly::zero();
        for (m, c) in &self.terms {
            let k = m.get(a).copied().unwrap_or(0);
            let mut base = m.clone();
            base.resize(base.len().max(a.max(b) + 1), 0);
            base[a] = 0;
            for t in 0..k {
                let mut mm = base.clone();
                mm[a] = k - 1 - t;
                mm[b] += t;
                q.add_term(mm, c.clone());
            }
        }
        let diff = &MPoly::var(a) - &MPoly::var(b);
        if &(&q * &diff) == self {
            Some(q)
        } else {
            None
        }
    }

    /// Renders terms in descending monomial order using the given variable names.
    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|x, y| {
            let dx: u32 = x.0.iter().sum();
            let dy: u32 = y.0.iter().sum();
            dy.cmp(&dx).then_with(|| y.0.cmp(x.0))
        });
        for (m, c) in ordered {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { names(v) } else { format!("{}^{e}", names(v)) })
                .collect();
            if factors.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&factors.join("*"));
            } else {
                s.push_str(&format!("{a}*{}", factors.join("*")));
            }
        }
        s
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|v| format!("v{v}")))
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(BigRational::one())
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    // Multiplying monomials adds exponents.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let n = m1.len().max(m2.len());
                let m: Monomial =
                    (0..n).map(|i| m1.get(i).copied().unwrap_or(0) + m2.get(i).copied().unwrap_or(0)).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        -&self
    }
}

impl Ring for MPoly {
    fn from_int(v: i64) -> Self {
        MPoly::constant(BigRational::from_int(v))
    }

    fn from_rational(r: &BigRational) -> Self {
        MPoly::constant(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::rat;

    #[test]
    fn arithmetic_and_division() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let f = &(&x * &x) - &(&y * &y);
        let q = f.div_difference(0, 1).unwrap();
        assert_eq!(q, &x + &y);
        assert!(x.div_difference(0, 1).is_none());
        assert_eq!(f.swap_vars(0, 1), -&f);
    }

    #[test]
    fn substitution() {
        let x = MPoly::var(0);
        let y = MPoly::var(1);
        let f = &(&x * &y) + &x;
        let mut vals = BTreeMap::new();
        vals.insert(1, rat(2));
        assert_eq!(f.substitute(&vals), &x * &MPoly::from_int(3));
        assert_eq!(f.display_with(&|v| ["x", "y"][v].to_string()), "x*y + x");
    }
}
