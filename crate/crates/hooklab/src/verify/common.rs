//! Shared pieces of the verifiers: outcomes, hook products, the random-point harness.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{schwartz_zippel_bound, Field, PointSampler, RatFunc, Ring, DEFAULT_BOUND};
use crate::error::{HookError, Result};
use crate::grothendieck::{wt, EvalContext};
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::sit_chain_sum;
use crate::Rational;

/// What a verifier found; [`super::run`] wraps it into a report.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    pub error_bound: Option<f64>,
    pub truncation: Option<usize>,
    pub note: Option<String>,
}

impl Outcome {
    /// Exact comparison of two values.
    pub fn compare<T: PartialEq + Display>(lhs: &T, rhs: &T) -> Self {
        Outcome { lhs: lhs.to_string(), rhs: rhs.to_string(), pass: lhs == rhs, ..Default::default() }
    }

    /// Exact comparison of two rational functions, rendered in `var`.
    pub fn compare_rf(lhs: &RatFunc, rhs: &RatFunc, var: &str) -> Self {
        Outcome { lhs: lhs.display_with(var), rhs: rhs.display_with(var), pass: lhs == rhs, ..Default::default() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_truncation(mut self, n: usize) -> Self {
        self.truncation = Some(n);
        self
    }

    /// Both this and `other` must pass; values are kept from `self`.
    pub fn and(mut self, other: Outcome, label: &str) -> Self {
        if !other.pass {
            self.pass = false;
            let msg = format!("{label} failed: {} vs {}", other.lhs, other.rhs);
            self.note = Some(match self.note {
                Some(n) => format!("{n}; {msg}"),
                None => msg,
            });
        }
        self
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn hook_product(lam: &Partition) -> BigInt {
    lam.hooks().iter().fold(BigInt::one(), |acc, &h| acc * BigInt::from(h))
}

pub fn int<F: Ring>(v: usize) -> F {
    F::from_int(v as i64)
}

/// `λ_i + d - i + 1`.
pub fn row_index(lam: &Partition, d: usize, i: usize) -> usize {
    lam.part(i) + d + 1 - i
}

/// `d + j - λ'_j` for a cell in column `j`.
pub fn col_index(conj: &Partition, d: usize, j: usize) -> usize {
    d + j - conj.part(j)
}

/// `y` long enough for every index the K-HLF sums touch inside `λ`.
pub fn y_len(lam: &Partition, d: usize) -> usize {
    lam.part(1) + d + 2
}

/// `Σ_{T ∈ SIT(λ/μ)} Π_k (wt(λ/ν(T_{<k})) - 1)^{-1}`, the common left side of
/// every K-theoretic hook formula.
pub fn khlf_chain_sum<F: Field>(sh: &SkewShape, ctx: &EvalContext<F>) -> Result<F> {
    let lam = sh.outer();
    sit_chain_sum(sh, &|nu: &Partition| (wt(lam, nu, ctx)? - F::one()).checked_inv())
}

/// `Σ_{T ∈ SIT(λ/μ)} Π_k q^{a_k}/(1 - q^{a_k})` with `a_k = |λ| - |ν(T_{<k})|`.
pub fn q_chain_sum(sh: &SkewShape) -> Result<RatFunc> {
    let n = sh.outer().size();
    sit_chain_sum(sh, &|nu: &Partition| {
        let a = n - nu.size();
        q_ratio(a)
    })
}

/// `q^h/(1 - q^h)`.
pub fn q_ratio(h: usize) -> Result<RatFunc> {
    RatFunc::monomial(Rational::one(), h as i64).checked_div(&one_minus_q(h))
}

/// `1 - q^h`.
pub fn one_minus_q(h: usize) -> RatFunc {
    RatFunc::one() - RatFunc::monomial(Rational::one(), h as i64)
}

pub fn q_pow(k: i64) -> RatFunc {
    RatFunc::monomial(Rational::one(), k)
}

/// True for errors that mean "this random point hit a pole"; such points are redrawn.
fn is_degenerate(e: &HookError) -> bool {
    matches!(e, HookError::Pole(_) | HookError::DivisionByZero | HookError::RepeatedPoint)
}

/// Redraws allowed per trial before giving up.
pub const RESAMPLE_BUDGET: usize = 100;

/// One named comparison made at a random point.
pub struct Check {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Check {
    pub fn new(name: &'static str, lhs: Rational, rhs: Rational) -> Self {
        Check { name, lhs, rhs }
    }
}

/// Runs `trials` seeded random evaluations. `point` receives the sampler and
/// the trial index and returns the comparisons made there; trials hitting a
/// pole are redrawn. `degree` bounds the total degree of the identity after
/// clearing denominators and sets the reported Schwartz–Zippel bound.
pub fn random_trials(
    trials: usize,
    seed: u64,
    degree: u64,
    point: &mut dyn FnMut(&mut PointSampler, usize) -> Result<Vec<Check>>,
) -> Result<Outcome> {
    let mut sampler = PointSampler::new(seed, DEFAULT_BOUND);
    let mut first: Option<Vec<Check>> = None;
    let mut failures = Vec::new();
    for t in 0..trials {
        let mut attempts = 0;
        let checks = loop {
            match point(&mut sampler, t) {
                Ok(c) => break c,
                Err(e) if is_degenerate(&e) => {
                    attempts += 1;
                    if attempts >= RESAMPLE_BUDGET {
                        return Err(HookError::ResampleExhausted(RESAMPLE_BUDGET));
                    }
                }
                Err(e) => return Err(e),
            }
        };
        for c in &checks {
            if c.lhs != c.rhs {
                failures.push(format!("trial {t}: {}", c.name));
            }
        }
        if first.is_none() {
            first = Some(checks);
        }
    }
    let first = first.unwrap_or_default();
    let render = |side: fn(&Check) -> &Rational| -> String {
        match first.as_slice() {
            [] => String::new(),
            [c] => side(c).to_string(),
            cs => cs.iter().map(|c| format!("{}={}", c.name, side(c))).collect::<Vec<_>>().join("; "),
        }
    };
    let mut out = Outcome {
        lhs: render(|c| &c.lhs),
        rhs: render(|c| &c.rhs),
        pass: failures.is_empty(),
        error_bound: Some(schwartz_zippel_bound(degree.max(1), DEFAULT_BOUND, trials)),
        ..Default::default()
    };
    if !failures.is_empty() {
        out.note = Some(format!("{} mismatches: {}", failures.len(), failures.join(", ")));
    }
    Ok(out)
}

/// Random `y_1..y_len` (or `y_i = i` when `natural`) and a random `β`.
pub fn random_context(s: &mut PointSampler, d: usize, len: usize, natural: bool) -> EvalContext<Rational> {
    let beta = s.rational();
    if natural {
        EvalContext::natural(d, beta, len)
    } else {
        let y = (0..len).map(|_| s.rational()).collect();
        EvalContext::new(d, beta, y)
    }
}

/// Conservative total-degree bound for a K-theoretic hook identity on `n`
/// cells with `d` variables and `terms` summands, after clearing denominators.
pub fn khlf_degree(n: usize, d: usize, terms: usize) -> u64 {
    ((n + 1) * (2 * d + 2) * (terms + n + 1)) as u64
}

