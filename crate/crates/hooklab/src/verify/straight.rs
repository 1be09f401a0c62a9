//! Straight-shape hook formulas: classical, K-theoretic, q-analogues and
//! Laurent coefficients in `β`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::common::{
    factorial, hook_product, int, khlf_chain_sum, khlf_degree, q_chain_sum, q_pow, one_minus_q,
    random_context, random_trials, row_index, col_index, y_len, Check, Outcome,
};
use super::{Mode, VerifyParams, DEFAULT_INFINITE_DEPTH};
use crate::arith::{Field, RatFunc};
use crate::error::{HookError, Result};
use crate::grothendieck::{wt, EvalContext};
use crate::shapes::{rc_covers_within, subpartitions, Partition, SkewShape};
use crate::tableaux::{count_syt, enum_bsyt, enum_sit, enum_syt, repeated_entry, Tableau};
use crate::Rational;

fn straight(lam: &Partition) -> SkewShape {
    SkewShape::straight(lam.clone())
}

/// `f^λ` by enumeration against `n!/Π h`.
pub fn hlf(lam: &Partition) -> Result<Outcome> {
    let lhs = BigInt::from(enum_syt(&straight(lam)).len());
    let rhs = factorial(lam.size()) / hook_product(lam);
    Ok(Outcome::compare(&lhs, &rhs))
}

fn beta() -> RatFunc {
    RatFunc::var()
}

/// `(-β)^{-n} Π_i (1+β(λ_i+d-i+1))^{λ_i} / Π h`.
fn khlf_closed_form<F: Field>(lam: &Partition, d: usize, b: &F) -> Result<F> {
    let mut num = F::one();
    for i in 1..=lam.length() {
        num = num * (F::one() + b.clone() * int(row_index(lam, d, i))).pow(lam.part(i));
    }
    let den = (-b.clone()).pow(lam.size()) * F::from_rational(&Rational::from_integer(hook_product(lam)));
    num.checked_div(&den)
}

/// Exact check in formal `β` at `y_i = i`.
pub fn khlf(lam: &Partition, d: usize) -> Result<Outcome> {
    let ctx = EvalContext::natural(d, beta(), y_len(lam, d));
    let lhs = khlf_chain_sum(&straight(lam), &ctx)?;
    let rhs = khlf_closed_form(lam, d, &beta())?;
    Ok(Outcome::compare_rf(&lhs, &rhs, "beta"))
}

/// The summand `Π_k (wt(λ/ν(T_{<k})) - 1)^{-1}` of every standard increasing
/// tableau of `λ`, in formal `β` at `y_i = i`.
pub fn khlf_sit_terms(lam: &Partition, d: usize) -> Result<Vec<(Tableau, RatFunc)>> {
    let ctx = EvalContext::natural(d, beta(), y_len(lam, d));
    let mut out = Vec::new();
    for t in enum_sit(&straight(lam)) {
        let mut term = RatFunc::one();
        for k in 1..=t.max_entry() {
            let nu = t.nu_le(k - 1)?;
            term = term * (wt(lam, &nu, &ctx)? - RatFunc::one()).checked_inv()?;
        }
        out.push((t, term));
    }
    Ok(out)
}

/// `β^{-n} Π_i (1+βy_{λ_i+d-i+1})^{λ_i} Π_{(i,j) ∈ λ} 1/(y_{d+j-λ'_j} - y_{λ_i+d-i+1})`.
fn khlf_multivariate_rhs<F: Field>(lam: &Partition, ctx: &EvalContext<F>) -> Result<F> {
    let d = ctx.d;
    let conj = lam.conjugate();
    let mut acc = F::one();
    for i in 1..=lam.length() {
        let yb = ctx.y(row_index(lam, d, i))?;
        acc = acc * (F::one() + ctx.beta.clone() * yb.clone()).pow(lam.part(i));
        for j in 1..=lam.part(i) {
            acc = acc.checked_div(&(ctx.y(col_index(&conj, d, j))? - yb.clone()))?;
        }
    }
    acc.checked_div(&ctx.beta.pow(lam.size()))
}

/// Random points in `(y, β)`; trial 0 uses `y_i = i`.
pub fn khlf_multivariate(lam: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let sh = straight(lam);
    let degree = khlf_degree(lam.size(), d, subpartitions(lam).len());
    random_trials(p.trials, p.seed, degree, &mut |s, t| {
        let ctx = random_context(s, d, y_len(lam, d), t == 0);
        let lhs = khlf_chain_sum(&sh, &ctx)?;
        let rhs = khlf_multivariate_rhs(lam, &ctx)?;
        Ok(vec![Check::new("khlf", lhs, rhs)])
    })
}

/// Partial sums of `Σ_{T ∈ IT(λ)} Π_{k=1}^{m(T)} Π_i (1+βb_i)/(1+βa_i(ν(T_{<k})))`
/// over tableaux with largest entry at most `depth`, for each requested depth
/// (ascending), where `b_i = λ_i+d-i+1` and `a_i(ν) = ν_i+d-i+1`.
pub fn infinite_khlf_partial_sums(lam: &Partition, d: usize, b: &Rational, depths: &[usize]) -> Result<Vec<Rational>> {
    let ctx = EvalContext::natural(d, b.clone(), y_len(lam, d));
    let states = subpartitions(lam);
    let index: HashMap<&Partition, usize> = states.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut ratio = Vec::with_capacity(states.len());
    let mut next = Vec::with_capacity(states.len());
    for nu in &states {
        // Reading an entry k with T_{<k} of shape ν contributes wt(λ/ν)^{-1}.
        ratio.push(wt(lam, nu, &ctx)?.checked_inv()?);
        next.push(rc_covers_within(nu, lam).iter().map(|c| index[c]).collect::<Vec<_>>());
    }
    let target = index[lam];
    let mut mass = vec![Rational::zero(); states.len()];
    mass[index[&Partition::empty()]] = Rational::one();
    let mut absorbed = if lam.is_empty() { Rational::one() } else { Rational::zero() };
    if lam.is_empty() {
        mass = vec![Rational::zero(); states.len()];
    }
    let max_depth = depths.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(depths.len());
    let mut wanted = depths.iter().peekable();
    while wanted.peek() == Some(&&0) {
        out.push(absorbed.clone());
        wanted.next();
    }
    for step in 1..=max_depth {
        let mut new_mass = vec![Rational::zero(); states.len()];
        for (k, m) in mass.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let w = m * &ratio[k];
            // The entry `step` is absent, or fills the cells of a cover.
            new_mass[k] += &w;
            for &c in &next[k] {
                if c == target {
                    absorbed += &w;
                } else {
                    new_mass[c] += &w;
                }
            }
        }
        mass = new_mass;
        while wanted.peek() == Some(&&step) {
            out.push(absorbed.clone());
            wanted.next();
        }
    }
    Ok(out)
}

const MAX_INFINITE_DEPTH: usize = 4096;

fn approx(r: &Rational) -> String {
    format!("{:.12e}", r.to_f64().unwrap_or(f64::NAN))
}

/// Partial sums at depths `M` and `2M` against the closed form, doubling `M`
/// until they agree within the tolerance. Needs `-1/(λ_1+d) < β < 0`.
pub fn khlf_infinite(lam: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let edge = lam.part(1) + d;
    let b = p.beta.clone().unwrap_or_else(|| Rational::new(BigInt::from(-1), BigInt::from(edge + 1)));
    let lower = Rational::new(BigInt::from(-1), BigInt::from(edge));
    if !(b < Rational::zero() && b > lower) {
        return Err(HookError::Unsupported(format!(
            "the increasing-tableau series converges only for {lower} < β < 0, got β = {b}"
        )));
    }
    let rhs = khlf_closed_form(lam, d, &b)?;
    let mut m = p.truncation.unwrap_or(DEFAULT_INFINITE_DEPTH).max(1);
    loop {
        let sums = infinite_khlf_partial_sums(lam, d, &b, &[m, 2 * m])?;
        let change = (&sums[1] - &sums[0]).abs();
        let error = (&sums[1] - &rhs).abs();
        if change < p.tolerance || 2 * m >= MAX_INFINITE_DEPTH {
            let pass = change < p.tolerance && error < p.tolerance;
            return Ok(Outcome {
                lhs: approx(&sums[1]),
                rhs: approx(&rhs),
                pass,
                truncation: Some(2 * m),
                note: Some(format!(
                    "beta={b}; |S(2M)-S(M)|={} and |S(2M)-rhs|={} against tolerance {}",
                    approx(&change),
                    approx(&error),
                    p.tolerance
                )),
                ..Default::default()
            });
        }
        m *= 2;
    }
}

/// `Σ_SIT Π q^a/(1-q^a)` against `q^{s(λ)} Π 1/(1-q^h)`.
pub fn qkhlf_cor(lam: &Partition) -> Result<Outcome> {
    let lhs = q_chain_sum(&straight(lam))?;
    let mut rhs = q_pow(lam.s_stat() as i64);
    for h in lam.hooks() {
        rhs = rhs.checked_div(&one_minus_q(h))?;
    }
    Ok(Outcome::compare_rf(&lhs, &rhs, "q"))
}

/// Both sides of the q-analogue of K-HLF at `y_i = q^i` over any field
/// containing `q` and `β`.
fn qkhlf_sides<F: Field>(lam: &Partition, d: usize, q: &F, b: &F) -> Result<(F, F)> {
    let ctx = EvalContext::from_fn(d, b.clone(), y_len(lam, d), |i| q.pow(i));
    let lhs = khlf_chain_sum(&straight(lam), &ctx)?;
    let conj = lam.conjugate();
    let mut rhs = F::one();
    for i in 1..=lam.length() {
        rhs = rhs * (F::one() + b.clone() * q.pow(row_index(lam, d, i))).pow(lam.part(i));
    }
    let shift: usize = lam.cells().iter().map(|c| col_index(&conj, d, c.col)).sum();
    let mut den = b.pow(lam.size()) * q.pow(shift);
    for h in lam.hooks() {
        den = den * (F::one() - q.pow(h));
    }
    Ok((lhs, rhs.checked_div(&den)?))
}

/// `lim_{β→∞} f(β)` for a rational function of degree 0, or an error otherwise.
fn limit_at_infinity(f: &RatFunc) -> Result<Rational> {
    let (dn, dd) = (f.num().degree(), f.den().degree());
    match (dn, dd) {
        (None, _) => Ok(Rational::zero()),
        (Some(a), Some(b)) if a < b => Ok(Rational::zero()),
        (Some(a), Some(b)) if a == b => Ok(f.num().leading() / f.den().leading()),
        _ => Err(HookError::Pole("no finite limit as β → ∞".into())),
    }
}

/// Exact in one variable at random values of the other. In `exact-beta` mode
/// `β` is formal and the `β → ∞` limit of both sides is compared with the
/// SIT form `Σ_SIT Π q^a/(1-q^a) = q^{s(λ)} Π 1/(1-q^h)` at the same `q`.
pub fn qkhlf(lam: &Partition, d: usize, mode: Mode, p: &VerifyParams) -> Result<Outcome> {
    let degree = khlf_degree(lam.size(), d, subpartitions(lam).len()) * (lam.part(1) + d + 1) as u64;
    let cor_lhs = q_chain_sum(&straight(lam))?;
    let mut cor_rhs = q_pow(lam.s_stat() as i64);
    for h in lam.hooks() {
        cor_rhs = cor_rhs.checked_div(&one_minus_q(h))?;
    }
    let mut shown: Option<(String, String)> = None;
    let mut record = |l: &RatFunc, r: &RatFunc, var: &str| {
        if shown.is_none() {
            shown = Some((l.display_with(var), r.display_with(var)));
        }
    };
    let mut out = random_trials(p.trials, p.seed, degree, &mut |s, _| {
        // q ≥ 2 keeps y_i = q^i away from the poles at q = 0 and q = 1.
        let v = s.rational() + Rational::one();
        let mut checks = Vec::new();
        if mode == Mode::ExactQ {
            let (l, r) = qkhlf_sides(lam, d, &RatFunc::var(), &RatFunc::constant(v))?;
            record(&l, &r, "q");
            checks.push(Check::new("formal-q", Rational::from_integer(BigInt::from((l != r) as u8)), Rational::zero()));
        } else {
            let (l, r) = qkhlf_sides(lam, d, &RatFunc::constant(v.clone()), &beta())?;
            record(&l, &r, "beta");
            checks.push(Check::new("formal-beta", Rational::from_integer(BigInt::from((l != r) as u8)), Rational::zero()));
            checks.push(Check::new("limit-lhs", limit_at_infinity(&l)?, cor_lhs.eval_at(&v)?));
            checks.push(Check::new("limit-rhs", limit_at_infinity(&r)?, cor_rhs.eval_at(&v)?));
        }
        Ok(checks)
    })?;
    if let Some((l, r)) = shown {
        let summary = format!("values at the first point: lhs={l}; rhs={r}");
        out.note = Some(match out.note {
            Some(n) => format!("{n}; {summary}"),
            None => summary,
        });
    }
    Ok(out)
}

/// `(-1)^n n! [β^{-n}] LHS = f^λ`.
pub fn khlf_leading(lam: &Partition, d: usize) -> Result<Outcome> {
    let n = lam.size();
    let ctx = EvalContext::natural(d, beta(), y_len(lam, d));
    let lhs_rf = khlf_chain_sum(&straight(lam), &ctx)?;
    let mut lhs = lhs_rf.laurent_coefficient(-(n as i64)) * Rational::from_integer(factorial(n));
    if n % 2 == 1 {
        lhs = -lhs;
    }
    let rhs = Rational::from_integer(count_syt(&straight(lam)).into());
    Ok(Outcome::compare(&lhs, &rhs))
}

/// `p_2(ν + δ_d) = Σ_{i=1}^{d} (ν_i + d - i)^2`.
fn p2_shifted(nu: &Partition, d: usize) -> Rational {
    let s: usize = (1..=d).map(|i| (nu.part(i) + d - i).pow(2)).sum();
    Rational::from_integer(BigInt::from(s))
}

fn harmonic(n: usize) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| acc + Rational::new(BigInt::one(), BigInt::from(k)))
}

fn r_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `Σ_{ν ⊊ λ} f^ν f^{λ/ν} p_2(ν+δ_d)/(n-|ν|)`, shared by both coefficient forms.
fn bsyt_chain_term(lam: &Partition, d: usize) -> Result<Rational> {
    let n = lam.size();
    let mut acc = Rational::zero();
    for nu in subpartitions(lam) {
        if nu.size() == n {
            continue;
        }
        let f_nu = count_syt(&SkewShape::straight(nu.clone()));
        let f_skew = count_syt(&SkewShape::new(lam.clone(), nu.clone())?);
        let coeff = Rational::from_integer((f_nu * f_skew).into());
        acc += coeff * p2_shifted(&nu, d) / r_int((n - nu.size()) as i64);
    }
    Ok(acc)
}

/// `(repeated entry k, count)` over barely standard tableaux of `λ`.
fn bsyt_by_repeat(lam: &Partition) -> Vec<(i64, i64)> {
    let mut counts: HashMap<u32, i64> = HashMap::new();
    for t in enum_bsyt(&straight(lam)) {
        if let Some(k) = repeated_entry(&t) {
            *counts.entry(k).or_default() += 1;
        }
    }
    let mut v: Vec<(i64, i64)> = counts.into_iter().map(|(k, c)| (k as i64, c)).collect();
    v.sort();
    v
}

/// The coefficient identity as printed:
/// `Σ f^ν f^{λ/ν} p_2(ν+δ_d)/(n-|ν|) - Σ_k (n+k-2)|BSYT_k| = f^λ((h_n-1) p_2(λ+δ_d) + n(n-d(d+1))/2)`.
pub fn bsyt_stated(lam: &Partition, d: usize) -> Result<Outcome> {
    let n = lam.size() as i64;
    let mut lhs = bsyt_chain_term(lam, d)?;
    for (k, c) in bsyt_by_repeat(lam) {
        lhs -= r_int((n + k - 2) * c);
    }
    let f = Rational::from_integer(count_syt(&straight(lam)).into());
    let di = d as i64;
    let rhs = f * ((harmonic(lam.size()) - Rational::one()) * p2_shifted(lam, d) + r_int(n * (n - di * (di + 1))) / r_int(2));
    Ok(Outcome::compare(&lhs, &rhs))
}

/// The coefficient identity obtained by expanding both sides of K-HLF to order `β^{1-n}`:
/// `Σ f^ν f^{λ/ν} p_2(ν+δ_d)/(n-|ν|) + 2 Σ_k (n-k)|BSYT_k|
///  = f^λ (h_n p_2(λ+δ_d) + n(n+1)/2 + 2n - 2 Σ_i λ_i(λ_i+d-i+1))`.
pub fn bsyt_derived(lam: &Partition, d: usize) -> Result<Outcome> {
    let n = lam.size() as i64;
    let mut lhs = bsyt_chain_term(lam, d)?;
    for (k, c) in bsyt_by_repeat(lam) {
        lhs += r_int(2 * (n - k) * c);
    }
    let f = Rational::from_integer(count_syt(&straight(lam)).into());
    let weighted: usize = (1..=lam.length()).map(|i| lam.part(i) * row_index(lam, d, i)).sum();
    let rhs = f * (harmonic(lam.size()) * p2_shifted(lam, d) + r_int(n * (n + 1)) / r_int(2) + r_int(2 * n)
        - r_int(2 * weighted as i64));
    Ok(Outcome::compare(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hlf_examples() {
        assert_eq!(hlf(&p("2,2")).unwrap().lhs, "2");
        assert!(hlf(&p("1")).unwrap().pass);
        assert!(hlf(&p("3,2,1")).unwrap().pass);
    }

    #[test]
    fn khlf_single_cell() {
        let o = khlf(&p("1"), 1).unwrap();
        assert!(o.pass, "{o:?}");
        // (1+2β)/(-β)
        let expected = (RatFunc::one() + beta() * <RatFunc as crate::arith::Ring>::from_int(2)).checked_div(&(-beta())).unwrap();
        assert_eq!(o.lhs, expected.display_with("beta"));
    }

    #[test]
    fn khlf_is_d_independent_in_validity() {
        for d in 2..=4 {
            assert!(khlf(&p("2,1"), d).unwrap().pass);
        }
    }

    #[test]
    fn sit_terms_sum_to_closed_form() {
        let lam = p("2,2");
        let terms = khlf_sit_terms(&lam, 2).unwrap();
        assert_eq!(terms.len(), 3);
        let sum = terms.iter().fold(RatFunc::zero(), |a, (_, t)| a + t.clone());
        assert_eq!(sum, khlf_closed_form(&lam, 2, &beta()).unwrap());
    }

    #[test]
    fn infinite_sum_single_cell_is_geometric() {
        // λ = (1), d = 1: Σ_{m≥1} r^m with r = (1+2β)/(1+β).
        let b = frac(-1, 3);
        let sums = infinite_khlf_partial_sums(&p("1"), 1, &b, &[1, 2, 3]).unwrap();
        let r = frac(1, 2);
        assert_eq!(sums[0], r);
        assert_eq!(sums[2], frac(7, 8));
        assert!(khlf_infinite(&p("1"), 1, &VerifyParams::default()).unwrap().pass);
    }

    #[test]
    fn infinite_sum_rejects_divergent_beta() {
        let params = VerifyParams { beta: Some(frac(1, 1)), ..VerifyParams::default() };
        assert!(matches!(khlf_infinite(&p("1"), 1, &params), Err(HookError::Unsupported(_))));
    }

    #[test]
    fn q_forms() {
        assert!(qkhlf_cor(&p("1")).unwrap().pass);
        assert!(qkhlf_cor(&p("2,2")).unwrap().pass);
        let params = VerifyParams { trials: 2, ..VerifyParams::default() };
        assert!(qkhlf(&p("2,1"), 2, Mode::ExactBeta, &params).unwrap().pass);
        assert!(qkhlf(&p("2,1"), 3, Mode::ExactQ, &params).unwrap().pass);
    }

    #[test]
    fn leading_coefficient_and_bsyt() {
        assert!(khlf_leading(&p("3,1"), 2).unwrap().pass);
        let o = bsyt_stated(&p("1"), 1).unwrap();
        assert_eq!((o.lhs.as_str(), o.rhs.as_str()), ("0", "-1/2"));
        for lam in ["1", "2", "2,1", "3,1", "2,2"] {
            assert!(bsyt_derived(&p(lam), p(lam).length() + 1).unwrap().pass, "{lam}");
        }
    }

    #[test]
    fn multivariate_passes_with_small_bound() {
        let params = VerifyParams { trials: 3, ..VerifyParams::default() };
        let o = khlf_multivariate(&p("2,1"), 2, &params).unwrap();
        assert!(o.pass, "{o:?}");
        assert!(o.error_bound.unwrap() < 1e-6);
    }
}
