//! Seeded random points for identity testing.

use std::collections::BTreeSet;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Ring;

/// Default coordinate bound; large enough that a single trial already has a
/// tiny Schwartz–Zippel failure probability for desk-scale identities.
pub const DEFAULT_BOUND: u64 = 1 << 40;

/// Deterministic source of integer test points in `[1, bound]`.
#[derive(Clone, Debug)]
pub struct PointSampler {
    rng: ChaCha8Rng,
    bound: u64,
}

impl PointSampler {
    pub fn new(seed: u64, bound: u64) -> Self {
        assert!(bound >= 2);
        PointSampler { rng: ChaCha8Rng::seed_from_u64(seed), bound }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn int(&mut self) -> i64 {
        self.rng.gen_range(1..=self.bound) as i64
    }

    pub fn rational(&mut self) -> BigRational {
        BigRational::from_int(self.int())
    }

    /// A rational `a/b` with `a, b` in `[1, bound]`.
    pub fn fraction(&mut self) -> BigRational {
        BigRational::new(self.int().into(), self.int().into())
    }

    /// `n` pairwise distinct integers, in draw order.
    pub fn distinct(&mut self, n: usize) -> Vec<BigRational> {
        assert!((n as u64) <= self.bound);
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let v = self.int();
            if seen.insert(v) {
                out.push(BigRational::from_int(v));
            }
        }
        out
    }
}

/// Schwartz–Zippel failure bound `(degree / bound)^trials`, capped at 1.
pub fn schwartz_zippel_bound(degree: u64, bound: u64, trials: usize) -> f64 {
    let p = (degree as f64 / bound as f64).min(1.0);
    p.powi(trials as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = PointSampler::new(7, 1000);
        let mut b = PointSampler::new(7, 1000);
        assert_eq!(a.distinct(10), b.distinct(10));
        let v = a.distinct(50);
        let s: BTreeSet<_> = v.iter().collect();
        assert_eq!(s.len(), 50);
    }

    #[test]
    fn bound_formula() {
        assert!(schwartz_zippel_bound(100, DEFAULT_BOUND, 1) < 1e-6);
        assert_eq!(schwartz_zippel_bound(10, 5, 3), 1.0);
    }
}
