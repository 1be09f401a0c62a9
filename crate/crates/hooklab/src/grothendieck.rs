//! Factorial Grothendieck polynomials, their vanishing and Pieri properties,
//! permutation combinatorics and vexillary double Grothendieck polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{determinant, Field, MPoly, Ring, UniPoly};
use crate::diagrams::{det_bound_beta, excited_peaks, generalized_excited_diagrams, schroeder};
use crate::error::{HookError, Result};
use crate::shapes::{rc_covers_within, Cell, Partition, SkewShape};
use crate::tableaux::{enum_ssvt, enum_ssyt_maxentry, SetValuedTableau};

/// `x ⊕ y = x + y + βxy`.
pub fn oplus<F: Ring>(a: &F, b: &F, beta: &F) -> F {
    a.clone() + b.clone() + beta.clone() * a.clone() * b.clone()
}

/// `x ⊖ y = (x - y)/(1 + βy)`.
pub fn ominus<F: Field>(a: &F, b: &F, beta: &F) -> Result<F> {
    (a.clone() - b.clone()).checked_div(&(F::one() + beta.clone() * b.clone()))
}

/// Number of variables `d`, the sequence `y_1, y_2, …` and `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct EvalContext<F> {
    pub d: usize,
    pub beta: F,
    y: Vec<F>,
}

impl<F: Ring> EvalContext<F> {
    /// `y[k]` is `y_{k+1}`.
    pub fn new(d: usize, beta: F, y: Vec<F>) -> Self {
        EvalContext { d, beta, y }
    }

    /// `y_i = f(i)` for `i = 1..=len`.
    pub fn from_fn(d: usize, beta: F, len: usize, f: impl Fn(usize) -> F) -> Self {
        EvalContext { d, beta, y: (1..=len).map(f).collect() }
    }

    /// `y_i = i`.
    pub fn natural(d: usize, beta: F, len: usize) -> Self {
        Self::from_fn(d, beta, len, |i| F::from_int(i as i64))
    }

    pub fn y_len(&self) -> usize {
        self.y.len()
    }

    /// `y_i`, 1-based.
    pub fn y(&self, i: usize) -> Result<F> {
        if i == 0 || i > self.y.len() {
            return Err(HookError::Unsupported(format!("y_{i} is not defined (have y_1..y_{})", self.y.len())));
        }
        Ok(self.y[i - 1].clone())
    }

    /// `y_{λ_i + d - i + 1}`.
    fn y_row(&self, lam: &Partition, i: usize) -> Result<F> {
        self.y(lam.part(i) + self.d - i + 1)
    }

    fn check_length(&self, lam: &Partition) -> Result<()> {
        if lam.length() > self.d {
            return Err(HookError::InvalidShape(format!("ℓ({lam}) exceeds d = {}", self.d)));
        }
        Ok(())
    }
}

/// Length of `y` needed for shapes inside `λ` with `d` variables, with room for one Pieri step.
pub fn y_len_for(lam: &Partition, d: usize) -> usize {
    lam.part(1) + d + 2
}

/// `[x|y]^k = Π_{m=1}^{k} (x ⊕ y_m)`.
pub fn bracket<F: Ring>(x: &F, ctx: &EvalContext<F>, k: usize) -> Result<F> {
    let mut acc = F::one();
    for m in 1..=k {
        acc = acc * oplus(x, &ctx.y(m)?, &ctx.beta);
    }
    Ok(acc)
}

/// `Σ_{T ∈ SSVT_d(μ)} β^{ne(T)-|μ|} Π_{u, r ∈ T(u)} (x_r ⊕ y_{r+c(u)})` over a precomputed list.
pub fn g_tableau_over<F: Ring>(tableaux: &[SetValuedTableau], size: usize, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    let mut total = F::zero();
    for t in tableaux {
        let mut term = ctx.beta.pow(t.num_entries() - size);
        for (c, set) in t.cells() {
            for &r in set {
                let yi = (r as i64 + c.content()) as usize;
                term = term * oplus(&x[r as usize - 1], &ctx.y(yi)?, &ctx.beta);
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// `G_μ(x|y)` by its set-valued tableau expansion.
pub fn g_tableau<F: Ring>(mu: &Partition, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    ctx.check_length(mu)?;
    if x.len() != ctx.d {
        return Err(HookError::Unsupported(format!("expected {} x values", ctx.d)));
    }
    let tableaux = enum_ssvt(&SkewShape::straight(mu.clone()), ctx.d as u32);
    g_tableau_over(&tableaux, mu.size(), x, ctx)
}

/// `G_μ(x|y) = det([x_i|y]^{μ_j+d-j} (1+βx_i)^{j-1}) / Π_{i<j} (x_i - x_j)`.
pub fn g_determinant<F: Field>(mu: &Partition, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    ctx.check_length(mu)?;
    let d = ctx.d;
    if x.len() != d {
        return Err(HookError::Unsupported(format!("expected {d} x values")));
    }
    let mut vandermonde = F::one();
    for i in 0..d {
        for j in i + 1..d {
            let diff = x[i].clone() - x[j].clone();
            if diff.is_zero() {
                return Err(HookError::RepeatedPoint);
            }
            vandermonde = vandermonde * diff;
        }
    }
    let mut m = Vec::with_capacity(d);
    for xi in x {
        let lift = F::one() + ctx.beta.clone() * xi.clone();
        let mut row = Vec::with_capacity(d);
        for j in 1..=d {
            row.push(bracket(xi, ctx, mu.part(j) + d - j)? * lift.pow(j - 1));
        }
        m.push(row);
    }
    determinant(&m).checked_div(&vandermonde)
}

/// Factorial Schur function `s_μ(x|a) = Σ_{T ∈ SSYT_d(μ)} Π_u (x_{T(u)} - a_{T(u)+c(u)})`,
/// with `a` read from the context's `y`.
pub fn factorial_schur<F: Ring>(mu: &Partition, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    ctx.check_length(mu)?;
    let mut total = F::zero();
    for t in enum_ssyt_maxentry(&SkewShape::straight(mu.clone()), ctx.d as u32) {
        let mut term = F::one();
        for (c, r) in t.cells() {
            let a = ctx.y((r as i64 + c.content()) as usize)?;
            term = term * (x[r as usize - 1].clone() - a);
        }
        total = total + term;
    }
    Ok(total)
}

/// `ȳ_λ = (⊖y_{λ_1+d}, ⊖y_{λ_2+d-1}, …, ⊖y_{λ_d+1})`.
pub fn y_lambda_point<F: Field>(lam: &Partition, ctx: &EvalContext<F>) -> Result<Vec<F>> {
    ctx.check_length(lam)?;
    (1..=ctx.d).map(|i| ominus(&F::zero(), &ctx.y_row(lam, i)?, &ctx.beta)).collect()
}

/// `Π_{(i,j) ∈ λ} (y_{d+j-λ'_j} ⊖ y_{λ_i+d-i+1})`, the value `G_λ(ȳ_λ|y)`.
pub fn ic_product<F: Field>(lam: &Partition, ctx: &EvalContext<F>) -> Result<F> {
    ctx.check_length(lam)?;
    let conj = lam.conjugate();
    let mut acc = F::one();
    for c in lam.cells() {
        let a = ctx.y(ctx.d + c.col - conj.part(c.col))?;
        acc = acc * ominus(&a, &ctx.y_row(lam, c.row)?, &ctx.beta)?;
    }
    Ok(acc)
}

/// `G_μ(ȳ_λ|y)` vanishes when `μ ⊄ λ` and equals [`ic_product`] when `μ = λ`;
/// other pairs impose no condition and return true.
pub fn vanishing_check<F: Field>(mu: &Partition, lam: &Partition, ctx: &EvalContext<F>) -> Result<bool> {
    ctx.check_length(mu)?;
    let point = y_lambda_point(lam, ctx)?;
    let value = g_determinant(mu, &point, ctx)?;
    if !mu.is_subset_of(lam) {
        Ok(value.is_zero())
    } else if mu == lam {
        Ok(value == ic_product(lam, ctx)?)
    } else {
        Ok(true)
    }
}

/// `wt(λ/μ) = Π_{i=1}^{d} (1+βy_{μ_i+d-i+1}) / (1+βy_{λ_i+d-i+1})`.
pub fn wt<F: Field>(lam: &Partition, mu: &Partition, ctx: &EvalContext<F>) -> Result<F> {
    ctx.check_length(lam)?;
    ctx.check_length(mu)?;
    let mut acc = F::one();
    for i in 1..=ctx.d {
        let num = F::one() + ctx.beta.clone() * ctx.y_row(mu, i)?;
        let den = F::one() + ctx.beta.clone() * ctx.y_row(lam, i)?;
        acc = acc * num.checked_div(&den)?;
    }
    Ok(acc)
}

/// `1 + βG_1(ȳ_λ|y)` against `Π_{i=1}^{d} (1+βy_i)/(1+βy_{λ_i+d-i+1})`.
pub fn g1_at_vanishing_point<F: Field>(lam: &Partition, ctx: &EvalContext<F>) -> Result<(F, F)> {
    let one = Partition::new(vec![1]).expect("partition");
    let point = y_lambda_point(lam, ctx)?;
    let lhs = F::one() + ctx.beta.clone() * g_determinant(&one, &point, ctx)?;
    let mut rhs = F::one();
    for i in 1..=ctx.d {
        let num = F::one() + ctx.beta.clone() * ctx.y(i)?;
        let den = F::one() + ctx.beta.clone() * ctx.y_row(lam, i)?;
        rhs = rhs * num.checked_div(&den)?;
    }
    Ok((lhs, rhs))
}

/// `G_μ(x)(1+βG_1(x)) - (1+βG_1(ȳ_μ)) Σ_ν β^{|ν/μ|} G_ν(x)`, with `ν/μ` ranging
/// over the (possibly empty) strips with cells in distinct rows and columns and `ℓ(ν) ≤ d`.
pub fn pieri_residual<F: Field>(mu: &Partition, ctx: &EvalContext<F>, x: &[F]) -> Result<F> {
    ctx.check_length(mu)?;
    let one = Partition::new(vec![1]).expect("partition");
    let g1x = g_determinant(&one, x, ctx)?;
    let lhs = g_determinant(mu, x, ctx)? * (F::one() + ctx.beta.clone() * g1x);
    let g1bar = g_determinant(&one, &y_lambda_point(mu, ctx)?, ctx)?;
    let mut bound_parts = mu.padded(ctx.d);
    for p in bound_parts.iter_mut() {
        *p += 1;
    }
    let bound = Partition::new(bound_parts)?;
    let mut sum = g_determinant(mu, x, ctx)?;
    for nu in rc_covers_within(mu, &bound) {
        if nu.length() > ctx.d {
            continue;
        }
        sum = sum + ctx.beta.pow(nu.size() - mu.size()) * g_determinant(&nu, x, ctx)?;
    }
    Ok(lhs - (F::one() + ctx.beta.clone() * g1bar) * sum)
}

/// `G|_{β=-1}(x|y) - (-β)^{|μ|} G(-x/β | -y/β)`; zero for every `β ≠ 0`.
pub fn rescaling_residual<F: Field>(mu: &Partition, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    rescaling_residual_with(mu, x, ctx, true)
}

/// As [`rescaling_residual`] but with `y ↦ y/β` instead of `-y/β`; this variant is not an identity.
pub fn rescaling_residual_unsigned_y<F: Field>(mu: &Partition, x: &[F], ctx: &EvalContext<F>) -> Result<F> {
    rescaling_residual_with(mu, x, ctx, false)
}

fn rescaling_residual_with<F: Field>(mu: &Partition, x: &[F], ctx: &EvalContext<F>, negate_y: bool) -> Result<F> {
    let b = ctx.beta.clone();
    let at_minus_one = EvalContext::new(ctx.d, -F::one(), ctx.y.clone());
    let lhs = g_determinant(mu, x, &at_minus_one)?;
    let xs: Vec<F> = x.iter().map(|v| (-v.clone()).checked_div(&b)).collect::<Result<_>>()?;
    let ys: Vec<F> = ctx
        .y
        .iter()
        .map(|v| if negate_y { (-v.clone()).checked_div(&b) } else { v.checked_div(&b) })
        .collect::<Result<_>>()?;
    let scaled = EvalContext::new(ctx.d, b.clone(), ys);
    let rhs = (-b).pow(mu.size()) * g_determinant(mu, &xs, &scaled)?;
    Ok(lhs - rhs)
}

/// A permutation in one-line notation `w_1 … w_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    w: Vec<usize>,
}

impl Permutation {
    pub fn new(w: Vec<usize>) -> Result<Self> {
        let n = w.len();
        let set: BTreeSet<usize> = w.iter().copied().collect();
        if set.len() != n || set.iter().any(|&v| v == 0 || v > n) {
            return Err(HookError::InvalidPermutation(format!("{w:?} is not a bijection on [{n}]")));
        }
        Ok(Permutation { w })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { w: (1..=n).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// `R(w) = {(i, w_j) : i < j, w_i > w_j}`.
    pub fn rothe(&self) -> BTreeSet<Cell> {
        let n = self.w.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.w[i] > self.w[j] {
                    out.insert(Cell { row: i + 1, col: self.w[j] });
                }
            }
        }
        out
    }

    /// Cells of `R(w)` with neither their south nor their east neighbour in `R(w)`.
    pub fn essential_set(&self) -> BTreeSet<Cell> {
        let r = self.rothe();
        r.iter()
            .filter(|c| {
                !r.contains(&Cell { row: c.row + 1, col: c.col }) && !r.contains(&Cell { row: c.row, col: c.col + 1 })
            })
            .copied()
            .collect()
    }

    /// At most one descent.
    pub fn is_grassmannian(&self) -> bool {
        self.w.windows(2).filter(|p| p[0] > p[1]).count() <= 1
    }

    /// True iff the one-line notation contains the given pattern (brute force).
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let k = pattern.len();
        let n = self.w.len();
        if k > n {
            return false;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let vals: Vec<usize> = idx.iter().map(|&i| self.w[i]).collect();
            let ok = (0..k).all(|a| (0..k).all(|b| (pattern[a] < pattern[b]) == (vals[a] < vals[b])));
            if ok {
                return true;
            }
            // Next k-subset in lexicographic order.
            let mut t = k;
            loop {
                if t == 0 {
                    return false;
                }
                t -= 1;
                if idx[t] < n - k + t {
                    idx[t] += 1;
                    for u in t + 1..k {
                        idx[u] = idx[u - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// 2143-avoiding.
    pub fn is_vexillary(&self) -> bool {
        !self.contains_pattern(&[2, 1, 4, 3])
    }

    /// 132-avoiding.
    pub fn is_dominant(&self) -> bool {
        !self.contains_pattern(&[1, 3, 2])
    }

    fn require_vexillary(&self) -> Result<()> {
        if self.is_vexillary() {
            Ok(())
        } else {
            Err(HookError::NotVexillary(self.to_string()))
        }
    }

    /// Row lengths of `R(w)` sorted into a partition.
    pub fn mu_of(&self) -> Result<Partition> {
        self.require_vexillary()?;
        let mut rows = vec![0usize; self.w.len()];
        for c in self.rothe() {
            rows[c.row - 1] += 1;
        }
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows)
    }

    /// Smallest partition containing the rectangles `[1,i] × [1,j]` for `(i,j) ∈ Ess(w)`.
    pub fn supershape_of(&self) -> Result<Partition> {
        self.require_vexillary()?;
        let mut rows = vec![0usize; self.w.len()];
        for c in self.essential_set() {
            for r in rows.iter_mut().take(c.row) {
                *r = (*r).max(c.col);
            }
        }
        Partition::new(rows)
    }

    /// `λ(w)/μ(w)`.
    pub fn skew_shape(&self) -> Result<SkewShape> {
        SkewShape::new(self.supershape_of()?, self.mu_of()?)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.w.len() <= 9 {
            write!(f, "{}", self.w.iter().map(|v| v.to_string()).collect::<String>())
        } else {
            write!(f, "{}", self.w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = HookError;

    /// Accepts `"1432"` (one digit per entry) or `"1,4,3,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || HookError::Parse(format!("bad permutation '{s}'"));
        let w: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            s.chars().map(|ch| ch.to_digit(10).map(|v| v as usize).ok_or_else(bad)).collect::<Result<_>>()?
        };
        Permutation::new(w)
    }
}

/// The Grassmannian permutation with descent at `d` and shape `μ`:
/// `w_i = i + μ_{d+1-i}` for `i ≤ d`, remaining values increasing.
pub fn grassmannian_perm(mu: &Partition, d: usize, n: usize) -> Result<Permutation> {
    if mu.length() > d || d + mu.part(1) > n {
        return Err(HookError::InvalidShape(format!("{mu} does not fit a {d} × {} box", n.saturating_sub(d))));
    }
    let first: Vec<usize> = (1..=d).map(|i| i + mu.part(d + 1 - i)).collect();
    let rest = (1..=n).filter(|v| !first.contains(v));
    Permutation::new(first.iter().copied().chain(rest).collect())
}

/// `w(n,k) = (1, 2, …, k, n+k, n+k-1, …, k+1)`.
pub fn w_nk(n: usize, k: usize) -> Permutation {
    Permutation { w: (1..=k).chain((k + 1..=n + k).rev()).collect() }
}

/// `Σ_{D ∈ D(λ(w)/μ(w))} β^{|D|-|μ|} Π_{(i,j) ∈ D} (x_i ⊕ y_j)` at the given values.
pub fn kmy_double_eval<F: Ring>(w: &Permutation, x: &[F], y: &[F], beta: &F) -> Result<F> {
    let sh = w.skew_shape()?;
    let mut total = F::zero();
    for d in generalized_excited_diagrams(&sh)? {
        let mut term = beta.pow(d.len() - sh.inner().size());
        for c in d.cells() {
            let xi = x.get(c.row - 1).ok_or_else(|| HookError::Unsupported(format!("x_{} missing", c.row)))?;
            let yj = y.get(c.col - 1).ok_or_else(|| HookError::Unsupported(format!("y_{} missing", c.col)))?;
            term = term * oplus(xi, yj, beta);
        }
        total = total + term;
    }
    Ok(total)
}

/// Variable ids for polynomial output: `β`, then `x_i`, then `y_j`.
pub const BETA_VAR: usize = 0;
const Y_OFFSET: usize = 64;

pub fn x_var(i: usize) -> usize {
    assert!((1..Y_OFFSET).contains(&i));
    i
}

pub fn y_var(j: usize) -> usize {
    Y_OFFSET + j
}

/// Names `beta`, `x1`, `y1`, … for [`MPoly::display_with`].
pub fn var_name(v: usize) -> String {
    match v {
        BETA_VAR => "beta".into(),
        v if v < Y_OFFSET => format!("x{v}"),
        v => format!("y{}", v - Y_OFFSET),
    }
}

/// How `β` enters a polynomial result.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaSpec {
    Formal,
    Value(BigRational),
}

impl BetaSpec {
    fn poly(&self) -> MPoly {
        match self {
            BetaSpec::Formal => MPoly::var(BETA_VAR),
            BetaSpec::Value(b) => MPoly::constant(b.clone()),
        }
    }
}

fn poly_vars(n: usize) -> (Vec<MPoly>, Vec<MPoly>) {
    ((1..=n).map(|i| MPoly::var(x_var(i))).collect(), (1..=n).map(|j| MPoly::var(y_var(j))).collect())
}

/// `G_w(x; y)` as an expanded polynomial, via the generalized excited diagram sum.
pub fn kmy_double_poly(w: &Permutation, beta: &BetaSpec) -> Result<MPoly> {
    let (x, y) = poly_vars(w.len().max(1));
    kmy_double_eval(w, &x, &y, &beta.poly())
}

/// `G_w(x; y)` via the excited-diagram form
/// `Σ_{D ∈ E} Π_{π(D)} (1 + β(x_i ⊕ y_j)) Π_D (x_i ⊕ y_j)`.
pub fn kmy_supershape_poly(w: &Permutation, beta: &BetaSpec) -> Result<MPoly> {
    let sh = w.skew_shape()?;
    let (x, y) = poly_vars(w.len().max(1));
    let b = beta.poly();
    let mut total = MPoly::zero();
    for (d, peaks) in excited_peaks(&sh)? {
        let mut term = MPoly::one();
        for c in d.cells() {
            term = &term * &oplus(&x[c.row - 1], &y[c.col - 1], &b);
        }
        for c in &peaks {
            term = &term * &(&MPoly::one() + &(&b * &oplus(&x[c.row - 1], &y[c.col - 1], &b)));
        }
        total = &total + &term;
    }
    Ok(total)
}

/// Sets every `y_j` to zero.
pub fn drop_y(p: &MPoly) -> MPoly {
    let mut vals = BTreeMap::new();
    let max_var = p.terms().map(|(m, _)| m.len()).max().unwrap_or(0);
    for v in Y_OFFSET..max_var.max(Y_OFFSET) {
        vals.insert(v, BigRational::zero());
    }
    p.substitute(&vals)
}

/// `Γ_w(β) = Σ_{D ∈ D(λ(w)/μ(w))} β^{|D|-|μ|}`.
pub fn principal_specialization(w: &Permutation) -> Result<UniPoly> {
    let sh = w.skew_shape()?;
    let mut counts = vec![0i64; sh.size() + 1];
    for d in generalized_excited_diagrams(&sh)? {
        counts[d.len() - sh.inner().size()] += 1;
    }
    Ok(UniPoly::from_ints(&counts))
}

/// `Σ_{D ∈ E(λ(w)/μ(w))} (1+β)^{|π(D)|}`.
pub fn principal_specialization_via_peaks(w: &Permutation) -> Result<UniPoly> {
    let sh = w.skew_shape()?;
    let one_plus = UniPoly::from_ints(&[1, 1]);
    let mut total = UniPoly::zero();
    for peaks in excited_peaks(&sh)?.values() {
        total = &total + &Ring::pow(&one_plus, peaks.len());
    }
    Ok(total)
}

/// `Γ_w(β)`, `det[η_β(A_i, B_j)]` for `λ(w)/μ(w)`, and whether the first is
/// coefficientwise at most the second.
pub fn gamma_det_bound(w: &Permutation) -> Result<(UniPoly, UniPoly, bool)> {
    let gamma = principal_specialization(w)?;
    let bound = det_bound_beta(&w.skew_shape()?);
    let len = gamma.coeffs().len().max(bound.coeffs().len());
    let ok = (0..len).all(|k| gamma.coeff(k) <= bound.coeff(k));
    Ok((gamma, bound, ok))
}

/// `Γ_{w(n,k)}(1)` and `2^{-C(k,2)} det[s_{n-2+i+j}]_{i,j=1..k}`.
pub fn gamma_wnk_values(n: usize, k: usize) -> Result<(BigRational, BigRational)> {
    let gamma = principal_specialization(&w_nk(n, k))?.eval(&BigRational::one());
    let s: Vec<Vec<BigRational>> = (1..=k)
        .map(|i| (1..=k).map(|j| BigRational::from_integer(schroeder(n + i + j - 2))).collect())
        .collect();
    let det = determinant(&s) * BigRational::new(BigInt::one(), BigInt::one() << (k * (k - 1) / 2));
    Ok((gamma, det))
}

/// `Γ_{w(n,k)}(1)` equals the Schröder determinant.
pub fn gamma_wnk_check(n: usize, k: usize) -> Result<bool> {
    let (a, b) = gamma_wnk_values(n, k)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, rat, RatFunc};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ctx(d: usize, beta: BigRational, len: usize) -> EvalContext<BigRational> {
        EvalContext::from_fn(d, beta, len, |i| frac((i * i + 3 * i + 1) as i64, 7))
    }

    #[test]
    fn operators() {
        let b = frac(2, 3);
        let x = frac(5, 7);
        assert_eq!(oplus(&x, &rat(0), &b), x);
        assert_eq!(ominus(&x, &x, &b).unwrap(), rat(0));
        assert!(ominus(&x, &frac(-3, 2), &b).is_err());
        let c = ctx(2, b, 6);
        assert_eq!(bracket(&x, &c, 0).unwrap(), rat(1));
    }

    #[test]
    fn small_grothendieck_values() {
        let c = ctx(1, frac(2, 5), 4);
        let x = [frac(3, 11)];
        assert_eq!(g_tableau(&p(""), &x, &c).unwrap(), rat(1));
        assert_eq!(g_tableau(&p("1"), &x, &c).unwrap(), oplus(&x[0], &c.y(1).unwrap(), &c.beta));
        assert_eq!(g_determinant(&p(""), &x, &c).unwrap(), rat(1));
    }

    #[test]
    fn tableau_and_determinant_agree() {
        let c = ctx(3, frac(-3, 4), 10);
        let x = [frac(3, 11), frac(-5, 13), frac(7, 17)];
        for mu in ["1", "2,1", "2,2", "3,1,1", "2,2,2"] {
            assert_eq!(g_tableau(&p(mu), &x, &c).unwrap(), g_determinant(&p(mu), &x, &c).unwrap(), "{mu}");
        }
        assert_eq!(g_determinant(&p("1"), &[rat(1), rat(1), rat(2)], &c), Err(HookError::RepeatedPoint));
    }

    #[test]
    fn beta_zero_gives_factorial_schur() {
        let c = ctx(3, rat(0), 10);
        let neg = EvalContext::new(3, rat(0), (1..=10).map(|i| -c.y(i).unwrap()).collect());
        let x = [frac(3, 11), frac(-5, 13), frac(7, 17)];
        for mu in ["1", "2,1", "3,2", "2,2,1"] {
            assert_eq!(g_tableau(&p(mu), &x, &c).unwrap(), factorial_schur(&p(mu), &x, &neg).unwrap());
        }
    }

    #[test]
    fn vanishing_point_values() {
        let c: EvalContext<RatFunc> = EvalContext::natural(1, RatFunc::var(), 4);
        let pt = y_lambda_point(&p(""), &c).unwrap();
        let expected = (-RatFunc::one()).checked_div(&(RatFunc::one() + RatFunc::var())).unwrap();
        assert_eq!(pt, vec![expected]);
        // G_22(ȳ_22|y) at y_i = i is 12 / ((1+3β)^2 (1+4β)^2).
        let c: EvalContext<RatFunc> = EvalContext::natural(2, RatFunc::var(), 6);
        let b = RatFunc::var();
        let lin = |k: i64| RatFunc::one() + RatFunc::from_int(k) * b.clone();
        let expected = RatFunc::from_int(12).checked_div(&(lin(3).pow(2) * lin(4).pow(2))).unwrap();
        let pt = y_lambda_point(&p("2,2"), &c).unwrap();
        assert_eq!(g_tableau(&p("2,2"), &pt, &c).unwrap(), expected);
        assert_eq!(ic_product(&p("2,2"), &c).unwrap(), expected);
    }

    #[test]
    fn vanishing_pairs() {
        let c = ctx(2, frac(1, 3), 8);
        assert!(vanishing_check(&p("2"), &p("1"), &c).unwrap());
        assert!(vanishing_check(&p("2,1"), &p("2,1"), &c).unwrap());
        assert!(vanishing_check(&p("1,1"), &p("3"), &c).unwrap());
    }

    #[test]
    fn pieri_and_weights() {
        let c = ctx(3, frac(2, 5), 10);
        let x = [frac(3, 11), frac(-5, 13), frac(7, 17)];
        for mu in ["", "1", "2,1", "1,1"] {
            assert_eq!(pieri_residual(&p(mu), &c, &x).unwrap(), rat(0), "{mu}");
        }
        assert_eq!(wt(&p("2,1"), &p("2,1"), &c).unwrap(), rat(1));
        let (l, r) = g1_at_vanishing_point(&p("2,1"), &c).unwrap();
        assert_eq!(l, r);
        let c0 = ctx(3, rat(0), 10);
        assert_eq!(pieri_residual(&p("2,1"), &c0, &x).unwrap(), rat(0));
    }

    #[test]
    fn rescaling() {
        let c = ctx(3, frac(2, 5), 10);
        let x = [frac(3, 11), frac(-5, 13), frac(7, 17)];
        for mu in ["1", "2,1", "2,2"] {
            assert_eq!(rescaling_residual(&p(mu), &x, &c).unwrap(), rat(0));
            assert_ne!(rescaling_residual_unsigned_y(&p(mu), &x, &c).unwrap(), rat(0));
        }
    }

    #[test]
    fn symmetric_in_x() {
        let c = ctx(3, frac(2, 5), 10);
        let x = [frac(3, 11), frac(-5, 13), frac(7, 17)];
        let xs = [x[1].clone(), x[0].clone(), x[2].clone()];
        assert_eq!(g_tableau(&p("2,1"), &x, &c).unwrap(), g_tableau(&p("2,1"), &xs, &c).unwrap());
    }

    #[test]
    fn permutation_shapes() {
        let w: Permutation = "1432".parse().unwrap();
        assert!(w.is_vexillary());
        assert_eq!(w.mu_of().unwrap(), p("2,1"));
        assert_eq!(w.supershape_of().unwrap(), p("3,3,2"));
        let id = Permutation::identity(4);
        assert!(id.rothe().is_empty());
        assert_eq!(id.mu_of().unwrap(), p(""));
        assert_eq!(w_nk(2, 1).one_line(), &[1, 3, 2]);
        assert!(w_nk(2, 1).is_vexillary() && !w_nk(2, 1).is_dominant());
        assert!("321".parse::<Permutation>().unwrap().is_dominant());
        assert!(w_nk(3, 2).is_vexillary());
        assert!(!w_nk(3, 2).is_dominant());
        let bad: Permutation = "2143".parse().unwrap();
        assert!(bad.mu_of().is_err());
        assert!("1233".parse::<Permutation>().is_err());
        assert_eq!(grassmannian_perm(&p("1"), 1, 2).unwrap().one_line(), &[2, 1]);
    }

    #[test]
    fn kmy_1432_at_y_zero() {
        let w: Permutation = "1432".parse().unwrap();
        let g = drop_y(&kmy_double_poly(&w, &BetaSpec::Formal).unwrap());
        let x = |i| MPoly::var(x_var(i));
        let b = MPoly::var(BETA_VAR);
        let m = |f: &[&MPoly]| f.iter().fold(MPoly::one(), |a, v| &a * *v);
        let two = MPoly::from_int(2);
        let terms = [
            m(&[&x(1), &x(1), &x(2)]),
            m(&[&x(2), &x(2), &x(1)]),
            m(&[&x(1), &x(1), &x(3)]),
            m(&[&x(1), &x(2), &x(3)]),
            m(&[&x(2), &x(2), &x(3)]),
            m(&[&b, &x(1), &x(1), &x(2), &x(2)]),
            m(&[&two, &b, &x(1), &x(1), &x(2), &x(3)]),
            m(&[&two, &b, &x(1), &x(2), &x(2), &x(3)]),
            m(&[&b, &b, &x(1), &x(1), &x(2), &x(2), &x(3)]),
        ];
        let expected = terms.iter().fold(MPoly::zero(), |a, t| &a + t);
        assert_eq!(g, expected);
        assert_eq!(g.num_terms(), 9);
        assert_eq!(kmy_supershape_poly(&w, &BetaSpec::Formal).unwrap(), kmy_double_poly(&w, &BetaSpec::Formal).unwrap());
        assert_eq!(kmy_double_poly(&Permutation::identity(3), &BetaSpec::Formal).unwrap(), MPoly::one());
    }

    #[test]
    fn grassmannian_matches_tableau_formula() {
        let w = grassmannian_perm(&p("1"), 1, 2).unwrap();
        let b = frac(2, 5);
        let x = [frac(3, 11)];
        let y = [frac(5, 7), frac(9, 4)];
        let c = EvalContext::new(1, b.clone(), y.to_vec());
        assert_eq!(kmy_double_eval(&w, &x, &y, &b).unwrap(), oplus(&x[0], &y[0], &b));
        assert_eq!(kmy_double_eval(&w, &x, &y, &b).unwrap(), g_tableau(&p("1"), &x, &c).unwrap());
    }

    #[test]
    fn principal_specializations() {
        let w: Permutation = "1432".parse().unwrap();
        assert_eq!(principal_specialization(&w).unwrap(), UniPoly::from_ints(&[5, 5, 1]));
        assert_eq!(principal_specialization_via_peaks(&w).unwrap(), UniPoly::from_ints(&[5, 5, 1]));
        assert_eq!(principal_specialization(&Permutation::identity(3)).unwrap(), UniPoly::one());
        assert!(gamma_det_bound(&w).unwrap().2);
        for n in 1..=3 {
            for k in 1..=2 {
                assert!(gamma_wnk_check(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }
}
