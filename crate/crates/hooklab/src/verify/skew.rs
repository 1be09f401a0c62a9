//! Skew-shape hook formulas over excited diagrams, their K-theoretic and
//! q-analogues, and the Okounkov–Olshanski forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::common::{
    col_index, factorial, hook_product, int, khlf_chain_sum, khlf_degree, one_minus_q, q_chain_sum, q_ratio,
    random_context, random_trials, row_index, y_len, Check, Outcome,
};
use super::{Mode, VerifyParams};
use crate::arith::{Field, RatFunc, Ring};
use crate::diagrams::{excited_diagrams, excited_peaks, generalized_excited_diagrams, Diagram};
use crate::error::Result;
use crate::grothendieck::{g_determinant, ominus, y_lambda_point, EvalContext};
use crate::shapes::{subpartitions, Cell, SkewShape};
use crate::tableaux::{count_syt, enum_ssvt, enum_ssyt_maxentry};
use crate::Rational;

fn hook(sh: &SkewShape, c: Cell) -> Result<usize> {
    sh.outer().hook(c)
}

/// `f^{λ/μ}` against `n! Σ_{D ∈ E} Π_{λ∖D} 1/h`.
pub fn nhlf(sh: &SkewShape) -> Result<Outcome> {
    let lhs = Rational::from_integer(count_syt(sh).into());
    let mut sum = Rational::zero();
    for d in excited_diagrams(sh)? {
        let mut den = BigInt::one();
        for c in d.complement() {
            den *= BigInt::from(hook(sh, c)?);
        }
        sum += Rational::new(BigInt::one(), den);
    }
    let rhs = sum * Rational::from_integer(factorial(sh.size()));
    Ok(Outcome::compare(&lhs, &rhs))
}

fn beta() -> RatFunc {
    RatFunc::var()
}

/// `Σ_{D ∈ D(λ/μ)} (-β)^{|D|-|λ|} Π_{(i,j) ∈ λ∖D} (1 + β(λ_i+d-i+1))/h(i,j)`.
fn knhlf_rhs(sh: &SkewShape, d: usize, gen: &[Diagram]) -> Result<RatFunc> {
    let lam = sh.outer();
    let mut total = RatFunc::zero();
    for dg in gen {
        let mut term = RatFunc::one();
        for c in dg.complement() {
            let num = RatFunc::one() + beta() * RatFunc::from_int(row_index(lam, d, c.row) as i64);
            term = term * num.checked_div(&(-beta() * RatFunc::from_int(hook(sh, c)? as i64)))?;
        }
        total = total + term;
    }
    Ok(total)
}

/// Exact check in formal `β` at `y_i = i`.
pub fn knhlf(sh: &SkewShape, d: usize) -> Result<Outcome> {
    let ctx = EvalContext::natural(d, beta(), y_len(sh.outer(), d));
    let lhs = khlf_chain_sum(sh, &ctx)?;
    let rhs = knhlf_rhs(sh, d, &generalized_excited_diagrams(sh)?)?;
    Ok(Outcome::compare_rf(&lhs, &rhs, "beta"))
}

/// `Σ_{D ∈ D(λ/μ)} β^{|D|-|λ|} Π_{λ∖D} (1+βy_{λ_i+d-i+1})/(y_{d+j-λ'_j} - y_{λ_i+d-i+1})`.
fn knhlf_multivariate_rhs<F: Field>(sh: &SkewShape, ctx: &EvalContext<F>, gen: &[Diagram]) -> Result<F> {
    let lam = sh.outer();
    let conj = lam.conjugate();
    let mut total = F::zero();
    for dg in gen {
        let mut term = F::one();
        for c in dg.complement() {
            let yb = ctx.y(row_index(lam, ctx.d, c.row))?;
            let num = F::one() + ctx.beta.clone() * yb.clone();
            let den = ctx.beta.clone() * (ctx.y(col_index(&conj, ctx.d, c.col))? - yb);
            term = term * num.checked_div(&den)?;
        }
        total = total + term;
    }
    Ok(total)
}

/// Random points in `(y, β)`; trial 0 uses `y_i = i`.
pub fn knhlf_multivariate(sh: &SkewShape, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let gen = generalized_excited_diagrams(sh)?;
    let degree = khlf_degree(sh.outer().size(), d, subpartitions(sh.outer()).len() + gen.len());
    random_trials(p.trials, p.seed, degree, &mut |s, t| {
        let ctx = random_context(s, d, y_len(sh.outer(), d), t == 0);
        let lhs = khlf_chain_sum(sh, &ctx)?;
        let rhs = knhlf_multivariate_rhs(sh, &ctx, &gen)?;
        Ok(vec![Check::new("knhlf", lhs, rhs)])
    })
}

/// Both sides at `y_i = q^i`, the right side in its q-form
/// `Σ_D β^{|D|-|λ|} Π_{λ∖D} (1+βq^{λ_i+d-i+1}) / (q^{d+j-λ'_j}(1-q^h))`.
fn qknhlf_sides<F: Field>(sh: &SkewShape, d: usize, q: &F, b: &F, gen: &[Diagram]) -> Result<(F, F)> {
    let lam = sh.outer();
    let conj = lam.conjugate();
    let ctx = EvalContext::from_fn(d, b.clone(), y_len(lam, d), |i| q.pow(i));
    let lhs = khlf_chain_sum(sh, &ctx)?;
    let mut rhs = F::zero();
    for dg in gen {
        let mut term = F::one();
        for c in dg.complement() {
            let num = F::one() + b.clone() * q.pow(row_index(lam, d, c.row));
            let den = b.clone() * q.pow(col_index(&conj, d, c.col)) * (F::one() - q.pow(hook(sh, c)?));
            term = term * num.checked_div(&den)?;
        }
        rhs = rhs + term;
    }
    Ok((lhs, rhs))
}

/// Random `(q, β)` points, or exact in one variable at random values of the other.
pub fn qknhlf(sh: &SkewShape, d: usize, mode: Mode, p: &VerifyParams) -> Result<Outcome> {
    let gen = generalized_excited_diagrams(sh)?;
    let lam = sh.outer();
    let degree = khlf_degree(lam.size(), d, subpartitions(lam).len() + gen.len()) * (lam.part(1) + d + 1) as u64;
    let flag = |l: &RatFunc, r: &RatFunc| Rational::from_integer(BigInt::from((l != r) as u8));
    random_trials(p.trials, p.seed, degree, &mut |s, _| {
        let q = s.rational() + Rational::one();
        let b = s.rational();
        Ok(match mode {
            Mode::ExactQ => {
                let (l, r) = qknhlf_sides(sh, d, &RatFunc::var(), &RatFunc::constant(b), &gen)?;
                vec![Check::new("formal-q", flag(&l, &r), Rational::zero())]
            }
            Mode::ExactBeta => {
                let (l, r) = qknhlf_sides(sh, d, &RatFunc::constant(q), &beta(), &gen)?;
                vec![Check::new("formal-beta", flag(&l, &r), Rational::zero())]
            }
            _ => {
                let (l, r) = qknhlf_sides(sh, d, &q, &b, &gen)?;
                vec![Check::new("qknhlf", l, r)]
            }
        })
    })
}

/// `Σ_SIT Π q^a/(1-q^a)` against `Σ_{D ∈ D} Π_{λ∖D} q^h/(1-q^h)` and against
/// `Σ_{D ∈ E} Π_{π(D)} 1/(1-q^h) Π_{λ∖(D ∪ π(D))} q^h/(1-q^h)`.
pub fn skew_q(sh: &SkewShape) -> Result<Outcome> {
    let lhs = q_chain_sum(sh)?;
    let mut by_gen = RatFunc::zero();
    for dg in generalized_excited_diagrams(sh)? {
        let mut term = RatFunc::one();
        for c in dg.complement() {
            term = term * q_ratio(hook(sh, c)?)?;
        }
        by_gen = by_gen + term;
    }
    let mut by_peaks = RatFunc::zero();
    for (dg, peaks) in excited_peaks(sh)? {
        let mut term = RatFunc::one();
        for c in dg.complement() {
            let h = hook(sh, c)?;
            term = term * if peaks.contains(&c) { RatFunc::one().checked_div(&one_minus_q(h))? } else { q_ratio(h)? };
        }
        by_peaks = by_peaks + term;
    }
    let peaks_outcome = Outcome::compare_rf(&lhs, &by_peaks, "q");
    Ok(Outcome::compare_rf(&lhs, &by_gen, "q").and(peaks_outcome, "excited-peak form"))
}

/// `G_μ(ȳ_λ|y) = Σ_{D ∈ D(λ/μ)} β^{|D|-|μ|} Π_{(i,j) ∈ D} (y_{d+j-λ'_j} ⊖ y_{λ_i+d-i+1})`
/// at random `(y, β)`, and at `β = -1` against
/// `Σ_D (-1)^{|D|-|μ|} Π_D (y_{d+j-λ'_j} - y_{λ_i+d-i+1})/(1 - y_{λ_i+d-i+1})`.
pub fn skew_chevalley(sh: &SkewShape, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let lam = sh.outer();
    let mu = sh.inner();
    let conj = lam.conjugate();
    let gen = generalized_excited_diagrams(sh)?;
    let degree = ((lam.size() + 1) * (d + lam.part(1) + 2) * 4) as u64;
    random_trials(p.trials, p.seed, degree, &mut |s, t| {
        let ctx = random_context(s, d, y_len(lam, d), t == 0);
        let a = |c: Cell| ctx.y(col_index(&conj, d, c.col));
        let b = |c: Cell| ctx.y(row_index(lam, d, c.row));
        let lhs = g_determinant(mu, &y_lambda_point(lam, &ctx)?, &ctx)?;
        let mut rhs = Rational::zero();
        for dg in &gen {
            let mut term = ctx.beta.pow((dg.len() - mu.size()) as i32);
            for &c in dg.cells() {
                term *= ominus(&a(c)?, &b(c)?, &ctx.beta)?;
            }
            rhs += term;
        }
        let mut checks = vec![Check::new("chevalley", lhs, rhs)];
        // At y_i = i the β = -1 point ⊖y_1 = -1/(1 - 1) is a pole.
        if t == 0 {
            return Ok(checks);
        }
        let minus_one = EvalContext::new(d, -Rational::one(), (1..=ctx.y_len()).map(|i| ctx.y(i)).collect::<Result<_>>()?);
        let lhs_k = g_determinant(mu, &y_lambda_point(lam, &minus_one)?, &minus_one)?;
        let mut rhs_k = Rational::zero();
        for dg in &gen {
            let mut term = if (dg.len() - mu.size()).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            for &c in dg.cells() {
                let (ya, yb) = (a(c)?, b(c)?);
                term *= (ya - &yb).checked_div(&(Rational::one() - yb))?;
            }
            rhs_k += term;
        }
        checks.push(Check::new("beta=-1", lhs_k, rhs_k));
        Ok(checks)
    })
}

/// `f^{λ/μ} = n! Σ_{T ∈ SSYT_d(μ)} Π_{(i,j) ∈ μ} (λ_{d+1-T(i,j)} + i - j) / Π_{λ} h`.
pub fn oof(sh: &SkewShape, d: usize) -> Result<Outcome> {
    let lam = sh.outer();
    let lhs = Rational::from_integer(count_syt(sh).into());
    let mut sum = BigInt::zero();
    for t in enum_ssyt_maxentry(&SkewShape::straight(sh.inner().clone()), d as u32) {
        let mut term = BigInt::one();
        for (c, r) in t.cells() {
            term *= BigInt::from(lam.part(d + 1 - r as usize) as i64 - c.content());
        }
        sum += term;
    }
    let rhs = Rational::new(sum * factorial(sh.size()), hook_product(lam));
    Ok(Outcome::compare(&lhs, &rhs))
}

/// Chain sum at `y_i = i` against
/// `Π_i (1+β(λ_i+d-i+1))^{λ_i} Σ_{T ∈ SSVT_d(μ)} (-β)^{ne(T)-|λ|}
///  Π_{(i,j) ∈ μ, r ∈ T(i,j)} (λ_{d+1-r}+i-j)/(1+β(λ_{d+1-r}+r)) / Π_λ h`.
pub fn k_oof(sh: &SkewShape, d: usize) -> Result<Outcome> {
    let lam = sh.outer();
    let ctx = EvalContext::natural(d, beta(), y_len(lam, d));
    let lhs = khlf_chain_sum(sh, &ctx)?;
    let mut sum = RatFunc::zero();
    for t in enum_ssvt(&SkewShape::straight(sh.inner().clone()), d as u32) {
        let mut term = (-beta()).powi(t.num_entries() as i64 - lam.size() as i64)?;
        for (c, set) in t.cells() {
            for &r in set {
                let lr = lam.part(d + 1 - r as usize) as i64;
                let num = RatFunc::from_int(lr - c.content());
                let den = RatFunc::one() + beta() * RatFunc::from_int(lr + r as i64);
                term = term * num.checked_div(&den)?;
            }
        }
        sum = sum + term;
    }
    let mut prefactor = RatFunc::one();
    for i in 1..=lam.length() {
        prefactor = prefactor * (RatFunc::one() + beta() * int::<RatFunc>(row_index(lam, d, i))).pow(lam.part(i));
    }
    let hooks = RatFunc::constant(Rational::from_integer(hook_product(lam)));
    let rhs = (prefactor * sum).checked_div(&hooks)?;
    Ok(Outcome::compare_rf(&lhs, &rhs, "beta"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn pinned_shape_passes_every_skew_form() {
        let s = sh("3,3,2/2,1");
        assert!(nhlf(&s).unwrap().pass);
        assert!(knhlf(&s, 3).unwrap().pass);
        assert!(skew_q(&s).unwrap().pass);
        assert!(oof(&s, 3).unwrap().pass);
        assert!(k_oof(&s, 3).unwrap().pass);
    }

    #[test]
    fn straight_reduction() {
        let s = sh("2,2");
        let a = knhlf(&s, 2).unwrap();
        let b = super::super::straight::khlf(&"2,2".parse().unwrap(), 2).unwrap();
        assert_eq!(a.lhs, b.lhs);
        assert_eq!(a.rhs, b.rhs);
    }

    #[test]
    fn empty_skew_is_one() {
        let s = sh("2,1/2,1");
        let o = knhlf(&s, 2).unwrap();
        assert!(o.pass);
        assert_eq!(o.lhs, "1");
    }

    #[test]
    fn random_forms() {
        let params = VerifyParams { trials: 3, ..VerifyParams::default() };
        let s = sh("4,3/2");
        assert!(knhlf_multivariate(&s, 2, &params).unwrap().pass);
        assert!(skew_chevalley(&s, 2, &params).unwrap().pass);
        for mode in [Mode::RandomMultivariate, Mode::ExactBeta, Mode::ExactQ] {
            assert!(qknhlf(&s, 2, mode, &params).unwrap().pass, "{mode}");
        }
    }
}
