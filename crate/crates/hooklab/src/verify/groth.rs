//! Factorial Grothendieck polynomial properties at random points, and
//! principal specializations of vexillary double Grothendieck polynomials.

use num_traits::Zero;

use super::common::{random_trials, Check, Outcome};
use super::VerifyParams;
use crate::arith::PointSampler;
use crate::error::Result;
use crate::grothendieck::{
    factorial_schur, g1_at_vanishing_point, g_determinant, g_tableau_over, gamma_det_bound as gamma_bound, gamma_wnk_values,
    ic_product, pieri_residual, rescaling_residual, y_lambda_point, y_len_for, EvalContext, Permutation,
};
use crate::shapes::{partitions_of, Partition, SkewShape};
use crate::tableaux::{enum_ssvt, SetValuedTableau};
use crate::Rational;

/// Distinct random `x`, random `y` and random `β` for `G_μ` in `d` variables.
fn random_point(s: &mut PointSampler, mu: &Partition, d: usize) -> (Vec<Rational>, EvalContext<Rational>) {
    let x = s.distinct(d);
    let beta = s.rational();
    // Long enough for ȳ_λ with any |λ| ≤ |μ| and for one Pieri step.
    let len = y_len_for(mu, d).max(mu.size() + d + 1) + 1;
    let y = (0..len).map(|_| s.rational()).collect();
    (x, EvalContext::new(d, beta, y))
}

/// Total-degree bound for the polynomial identities about `G_μ` in `d` variables.
fn g_degree(mu: &Partition, d: usize) -> u64 {
    (4 * (mu.size() + d + 1) * (d + 1) * (mu.part(1) + d + 2)) as u64
}

/// `μ` with its last removable cell deleted.
fn remove_corner(mu: &Partition) -> Option<Partition> {
    let mut parts = mu.parts().to_vec();
    let last = parts.last_mut()?;
    *last -= 1;
    Partition::new(parts).ok()
}

fn tableau_vs_det(
    svt: &[SetValuedTableau],
    mu: &Partition,
    x: &[Rational],
    ctx: &EvalContext<Rational>,
) -> Result<Check> {
    Ok(Check::new("tableau=determinant", g_tableau_over(svt, mu.size(), x, ctx)?, g_determinant(mu, x, ctx)?))
}

fn tableaux_of(mu: &Partition, d: usize) -> Vec<SetValuedTableau> {
    enum_ssvt(&SkewShape::straight(mu.clone()), d as u32)
}

/// Every listed property of `G_μ` at each random point. Apart from the
/// tableau check, `G` is evaluated by its bialternant formula.
pub fn g_properties(mu: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let svt = tableaux_of(mu, d);
    random_trials(p.trials, p.seed, g_degree(mu, d), &mut |s, _| {
        let (x, ctx) = random_point(s, mu, d);
        let g = g_determinant(mu, &x, &ctx)?;
        let mut checks = vec![tableau_vs_det(&svt, mu, &x, &ctx)?];
        if d >= 2 {
            let mut swapped = x.clone();
            swapped.swap(0, 1);
            checks.push(Check::new("symmetric", g_determinant(mu, &swapped, &ctx)?, g.clone()));
        }
        checks.push(Check::new("pieri", pieri_residual(mu, &ctx, &x)?, Rational::zero()));
        checks.push(Check::new("vanishing-self", g_determinant(mu, &y_lambda_point(mu, &ctx)?, &ctx)?, ic_product(mu, &ctx)?));
        if let Some(smaller) = remove_corner(mu) {
            checks.push(Check::new("vanishing-below", g_determinant(mu, &y_lambda_point(&smaller, &ctx)?, &ctx)?, Rational::zero()));
        }
        let (g1_lhs, g1_rhs) = g1_at_vanishing_point(mu, &ctx)?;
        checks.push(Check::new("g1-at-vanishing-point", g1_lhs, g1_rhs));
        checks.push(Check::new("beta=-1 rescaling", rescaling_residual(mu, &x, &ctx)?, Rational::zero()));
        let y: Vec<Rational> = (1..=ctx.y_len()).map(|i| ctx.y(i)).collect::<Result<_>>()?;
        let at_zero = EvalContext::new(d, Rational::zero(), y.iter().map(|v| -v.clone()).collect());
        let schur_ctx = EvalContext::new(d, Rational::zero(), y);
        checks.push(Check::new("beta=0 factorial Schur", g_determinant(mu, &x, &at_zero)?, factorial_schur(mu, &x, &schur_ctx)?));
        Ok(checks)
    })
}

/// Set-valued tableau formula against the bialternant formula.
pub fn g_tableau_det(mu: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let svt = tableaux_of(mu, d);
    random_trials(p.trials, p.seed, g_degree(mu, d), &mut |s, _| {
        let (x, ctx) = random_point(s, mu, d);
        Ok(vec![tableau_vs_det(&svt, mu, &x, &ctx)?])
    })
}

/// `G_μ(1 + βG_1) = (1 + βG_1(ȳ_μ)) Σ_ν β^{|ν/μ|} G_ν`.
pub fn pieri(mu: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    random_trials(p.trials, p.seed, g_degree(mu, d), &mut |s, _| {
        let (x, ctx) = random_point(s, mu, d);
        Ok(vec![Check::new("pieri residual", pieri_residual(mu, &ctx, &x)?, Rational::zero())])
    })
}

/// `G_μ(ȳ_μ|y)` is the hook product, and `G_μ(ȳ_λ|y) = 0` for a random `λ ⊉ μ`
/// with `ℓ(λ) ≤ d` and `|λ| ≤ |μ|`.
pub fn vanishing(mu: &Partition, d: usize, p: &VerifyParams) -> Result<Outcome> {
    let others: Vec<Partition> = (0..=mu.size())
        .flat_map(partitions_of)
        .filter(|l| l.length() <= d && !mu.is_subset_of(l))
        .collect();
    random_trials(p.trials, p.seed, g_degree(mu, d), &mut |s, _| {
        let (_, ctx) = random_point(s, mu, d);
        let mut checks =
            vec![Check::new("self", g_determinant(mu, &y_lambda_point(mu, &ctx)?, &ctx)?, ic_product(mu, &ctx)?)];
        if !others.is_empty() {
            let lam = &others[(s.int() as usize) % others.len()];
            checks.push(Check::new("not-contained", g_determinant(mu, &y_lambda_point(lam, &ctx)?, &ctx)?, Rational::zero()));
        }
        Ok(checks)
    })
}

/// `Γ_w(β) ≤ det[η_β(A_i, B_j)]` coefficientwise.
pub fn gamma_det_bound(w: &Permutation) -> Result<Outcome> {
    let (gamma, bound, ok) = gamma_bound(w)?;
    Ok(Outcome { lhs: gamma.display_with("beta"), rhs: bound.display_with("beta"), pass: ok, ..Default::default() }
        .with_note("coefficientwise lhs ≤ rhs"))
}

/// `Γ_{w(n,k)}(1) = 2^{-C(k,2)} det[s_{n-2+i+j}]`.
pub fn gamma_wnk(n: usize, k: usize) -> Result<Outcome> {
    let (gamma, det) = gamma_wnk_values(n, k)?;
    Ok(Outcome::compare(&gamma, &det))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn properties_hold_on_small_shapes() {
        let params = VerifyParams { trials: 2, ..VerifyParams::default() };
        for (mu, d) in [("", 1), ("1", 1), ("2,1", 2), ("2,2", 3)] {
            let o = g_properties(&p(mu), d, &params).unwrap();
            assert!(o.pass, "{mu} {d}: {o:?}");
            assert!(vanishing(&p(mu), d, &params).unwrap().pass);
        }
    }

    #[test]
    fn permutation_checks() {
        assert!(gamma_det_bound(&"1432".parse().unwrap()).unwrap().pass);
        assert!(gamma_wnk(3, 2).unwrap().pass);
    }
}
